//! Graphviz export of the specialization order.

use sctop_core::FinPoset;

use crate::dsl::NamedSpace;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Hasse diagram with `names[i]` on node `i`, smaller elements at the bottom.
pub fn poset_to_dot(p: &FinPoset, names: &[String]) -> String {
    let mut out = String::from("digraph {\n  rankdir=BT;\n");
    for n in names {
        out.push_str(&format!("  {};\n", quote(n)));
    }
    for (a, b) in p.covers() {
        out.push_str(&format!("  {} -> {};\n", quote(&names[a]), quote(&names[b])));
    }
    out.push_str("}\n");
    out
}

pub fn to_dot(x: &NamedSpace) -> String {
    poset_to_dot(x.space.specialization(), &x.names)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::load_finite;

    fn edges(dot: &str) -> usize {
        dot.matches("->").count()
    }

    #[test]
    fn small_diagrams() {
        let chain = to_dot(&load_finite("finite { elems: a, b; leq: a < b }").unwrap());
        assert_eq!(chain, "digraph {\n  rankdir=BT;\n  \"a\";\n  \"b\";\n  \"a\" -> \"b\";\n}\n");
        assert_eq!(edges(&to_dot(&load_finite("finite { elems: a, b }").unwrap())), 0);
        let join = to_dot(&load_finite("finite { elems: a, b, t; leq: a < t, b < t }").unwrap());
        assert_eq!(edges(&join), 2);
        // The transitive pair is left out.
        let chain3 = to_dot(&load_finite("finite { elems: a, b, c; leq: a < b, b < c, a < c }").unwrap());
        assert_eq!(edges(&chain3), 2);
    }
}
