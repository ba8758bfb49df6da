//! Every suite over the exhaustive populations.

use std::time::Instant;

use sctop_core::verify::{self, SuiteReport};
use sctop_core::DEFAULT_CAP;

fn assert_passes(rep: SuiteReport, started: Instant) {
    eprintln!("{}: {} cases in {:?}", rep.suite, rep.cases, started.elapsed());
    assert!(rep.passed(), "{:#?}", &rep.violations[..rep.violations.len().min(5)]);
}

#[test]
fn single_space_suites_up_to_four_points() {
    let pop = verify::exhaustive_population(4);
    assert_eq!(pop.len(), 1 + 1 + 3 + 19 + 219);
    type Suite = fn(&[sctop_core::FinSpace], usize) -> sctop_core::Result<SuiteReport>;
    let suites: [Suite; 7] = [
        verify::finite_collapse,
        verify::irreducible_basics,
        verify::si_topology_basics,
        verify::i_closed_basics,
        verify::i_closed_intersection,
        verify::hyperspace_order,
        verify::completion_uniqueness,
    ];
    for suite in suites {
        let t = Instant::now();
        assert_passes(suite(&pop, DEFAULT_CAP).unwrap(), t);
    }
}

#[test]
fn map_suites_up_to_three_points() {
    let pop = verify::exhaustive_population(3);
    let t = Instant::now();
    assert_passes(verify::continuity_hierarchy(&pop, DEFAULT_CAP).unwrap(), t);
    let t = Instant::now();
    assert_passes(verify::universal_property(&pop, DEFAULT_CAP, 3).unwrap(), t);
}

#[test]
fn catalog_up_to_ten_points() {
    let t = Instant::now();
    assert_passes(verify::catalog_suite(10).unwrap(), t);
}

#[test]
fn delta_is_a_topology_up_to_four_points() {
    for x in verify::exhaustive_population(4) {
        assert_eq!(verify::delta_topology_witness(&x, DEFAULT_CAP).unwrap(), None);
    }
}
