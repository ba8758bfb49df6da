mod common;

use common::{CORPUS, MALFORMED};
use proptest::prelude::*;
use sctop::dsl::{self, describe, Document, Elaborated, NamedSpace};
use sctop_core::FinPoset;

fn reprint(text: &str) -> String {
    dsl::parse(text).unwrap_or_else(|e| panic!("{text:?}: {e}")).to_string()
}

#[test]
fn corpus_printing_is_a_fixpoint() {
    for doc in CORPUS {
        let once = reprint(doc);
        assert_eq!(reprint(&once), once, "{doc:?}");
    }
}

#[test]
fn corpus_elaborates_to_the_same_thing_after_printing() {
    for doc in CORPUS {
        let printed = reprint(doc);
        match dsl::parse(doc).unwrap() {
            Document::Map(_) => {
                let (a, b) = (dsl::load_map(doc).unwrap(), dsl::load_map(&printed).unwrap());
                assert_eq!((&a.from, &a.to, &a.map), (&b.from, &b.to, &b.map), "{doc:?}");
            }
            Document::Space(_) => match (dsl::load_space(doc).unwrap(), dsl::load_space(&printed).unwrap()) {
                (Elaborated::Finite(a), Elaborated::Finite(b)) => assert_eq!(a, b, "{doc:?}"),
                (Elaborated::Symbolic(a), Elaborated::Symbolic(b)) => assert_eq!(a.name(), b.name()),
                _ => panic!("{doc:?} changed kind"),
            },
        }
    }
}

fn load(doc: &str) -> Result<(), dsl::DslError> {
    match dsl::parse(doc)? {
        Document::Map(_) => dsl::load_map(doc).map(drop),
        Document::Space(_) => dsl::load_space(doc).map(drop),
    }
}

#[test]
fn malformed_documents_report_positions() {
    for (doc, line, col) in MALFORMED {
        let err = match load(doc) {
            Err(e) => e,
            Ok(()) => panic!("{doc:?} was accepted"),
        };
        let at = err.span();
        assert_eq!((at.line, at.col), (line, col), "{doc:?}: {err}");
        assert!(err.to_string().starts_with(&format!("{line}:{col}: ")), "{err}");
    }
}

fn poset(max: usize) -> impl Strategy<Value = FinPoset> {
    (1..=max).prop_flat_map(|n| prop::collection::vec((0..n, 0..n), 0..=2 * n)).prop_map(|pairs| {
        let n = pairs.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(1);
        FinPoset::from_generators(n, pairs.into_iter().filter(|(a, b)| a < b)).unwrap()
    })
}

proptest! {
    #[test]
    fn described_spaces_parse_back(p in poset(8)) {
        let x = NamedSpace::numbered(sctop_core::FinSpace::alexandroff(&p));
        let text = describe(&x);
        let y = dsl::load_finite(&text).unwrap();
        prop_assert_eq!(&y, &x);
        prop_assert_eq!(reprint(&text), text);
    }
}
