//! Homeomorphism search between finite spaces.

use alloc::vec;
use alloc::vec::Vec;

use crate::space::FinSpace;
use crate::subset::Subset;

/// Largest size for the unguided permutation search.
pub const PERMUTATION_SEARCH_LIMIT: usize = 8;

/// Is `table` a bijection `a → b` that maps open sets onto open sets?
pub fn is_homeomorphism(a: &FinSpace, b: &FinSpace, table: &[usize]) -> bool {
    if a.size() != b.size() || table.len() != a.size() || a.opens().len() != b.opens().len() {
        return false;
    }
    let mut seen = Subset::empty(b.size());
    for &t in table {
        if t >= b.size() || seen.contains(t) {
            return false;
        }
        seen.insert(t);
    }
    a.opens()
        .iter()
        .all(|u| b.is_open(&u.map(b.size(), |i| table[i])))
}

/// Finds a homeomorphism `a → b` agreeing with the entries of `fixed` that
/// are `Some`. Candidates are built as order isomorphisms of the
/// specialization orders first; if that fails and the spaces are small, every
/// permutation is tried as a cross-check.
pub fn find_homeomorphism(a: &FinSpace, b: &FinSpace, fixed: &[Option<usize>]) -> Option<Vec<usize>> {
    if a.size() != b.size() || a.opens().len() != b.opens().len() || fixed.len() != a.size() {
        return None;
    }
    let n = a.size();
    let mut table = vec![usize::MAX; n];
    let mut used = Subset::empty(n);
    if search(a, b, fixed, 0, &mut table, &mut used, true) {
        return Some(table);
    }
    if n <= PERMUTATION_SEARCH_LIMIT {
        let mut used = Subset::empty(n);
        if search(a, b, fixed, 0, &mut table, &mut used, false) {
            return Some(table);
        }
    }
    None
}

fn search(
    a: &FinSpace,
    b: &FinSpace,
    fixed: &[Option<usize>],
    i: usize,
    table: &mut [usize],
    used: &mut Subset,
    order_guided: bool,
) -> bool {
    let n = a.size();
    if i == n {
        return is_homeomorphism(a, b, table);
    }
    let (p, q) = (a.specialization(), b.specialization());
    let candidates: Vec<usize> = match fixed[i] {
        Some(j) => vec![j],
        None => (0..n).collect(),
    };
    for j in candidates {
        if j >= n || used.contains(j) {
            continue;
        }
        if order_guided
            && !(0..i).all(|k| {
                p.leq(k, i) == q.leq(table[k], j) && p.leq(i, k) == q.leq(j, table[k])
            })
        {
            continue;
        }
        table[i] = j;
        used.insert(j);
        if search(a, b, fixed, i + 1, table, used, order_guided) {
            return true;
        }
        used.remove(j);
    }
    table[i] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::FinPoset;

    #[test]
    fn relabeled_join_is_found() {
        let x = FinSpace::alexandroff(&FinPoset::from_generators(3, [(0, 2), (1, 2)]).unwrap());
        let perm = [1, 2, 0];
        let y = x.relabel(&perm).unwrap();
        let h = find_homeomorphism(&x, &y, &[None; 3]).unwrap();
        assert!(is_homeomorphism(&x, &y, &h));
        // Pinning both minimal points forces the permutation itself.
        assert_eq!(find_homeomorphism(&x, &y, &[Some(1), Some(2), None]).unwrap(), perm);
        // a and t cannot be swapped.
        assert_eq!(find_homeomorphism(&x, &y, &[Some(0), None, None]), None);
    }

    #[test]
    fn non_homeomorphic() {
        let chain = FinSpace::alexandroff(&FinPoset::chain(2));
        assert_eq!(find_homeomorphism(&chain, &FinSpace::discrete(2), &[None; 2]), None);
        assert_eq!(
            find_homeomorphism(&FinSpace::empty(), &FinSpace::empty(), &[]),
            Some(vec![])
        );
    }
}
