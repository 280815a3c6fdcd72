mod common;

use std::collections::BTreeSet;

use common::all_actions;
use cqs::audit::family_sweep;
use cqs::tables::{build_table, emit, enumerate_classes, parse_json, Format};
use cqs::{canonical_form, iso_equivalent};

#[test]
fn enumeration_is_closed_and_duplicate_free() {
    for n in 2..=8 {
        for d in 2..=4 {
            let classes = enumerate_classes(n, d);
            let set: BTreeSet<_> = classes.iter().cloned().collect();
            assert_eq!(set.len(), classes.len());
            for a in all_actions(n, d) {
                assert!(set.contains(&canonical_form(&a)), "{a}");
            }
            for (i, a) in classes.iter().enumerate() {
                assert_eq!(&canonical_form(a), a);
                for b in &classes[i + 1..] {
                    assert!(!iso_equivalent(a, b), "{a} {b}");
                }
            }
        }
    }
}

#[test]
fn json_roundtrip() {
    for with_residue in [false, true] {
        let rows = build_table(4, 7, 3, with_residue);
        assert_eq!(parse_json(&emit(&rows, Format::Json)).unwrap(), rows);
    }
}

#[test]
fn csv_shape() {
    let rows = build_table(4, 5, 3, true);
    let csv = emit(&rows, Format::Csv);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("n,t,verdict,residue"));
    assert_eq!(lines.next(), Some("4,1-1-1,NG,1"));
    assert_eq!(csv.lines().count(), rows.len() + 1);
    assert_eq!(emit(&[], Format::Csv), "n,t,verdict\n");
}

#[test]
fn output_is_deterministic() {
    let a = emit(&build_table(4, 8, 4, true), Format::Pretty);
    let b = emit(&build_table(4, 8, 4, true), Format::Pretty);
    assert_eq!(a, b);
}

#[test]
fn families_hold_across_sweep() {
    let sweep = family_sweep(15, 5);
    assert!(sweep.mismatches.is_empty(), "{:?}", sweep.mismatches);
    assert_eq!(sweep.checked.len(), 6);
}
