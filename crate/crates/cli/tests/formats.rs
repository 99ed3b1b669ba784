use std::collections::BTreeMap;

use hopfpow_cli::commands::{compute_table, layout};
use hopfpow_cli::emit::{parse_csv_cells, table_from_json, to_csv, to_json, to_latex};
use hopfpow_cli::{build, parse_spec, AlgebraSpec};
use hopfpow_core::group::{MAX_CYCLIC_ORDER, MAX_SYMMETRIC_DEGREE};
use proptest::prelude::*;

fn latex_cells(text: &str) -> BTreeMap<(usize, usize), usize> {
    let mut cells = BTreeMap::new();
    for line in text.lines() {
        let Some(row) = line.strip_suffix("\\\\") else {
            continue;
        };
        let mut parts = row.split('&');
        let Ok(i) = parts.next().unwrap_or("").trim().parse::<usize>() else {
            continue;
        };
        for (k, c) in parts.enumerate() {
            let c = c
                .trim()
                .trim_start_matches("\\mathbf{")
                .trim_end_matches('}')
                .trim();
            if !c.is_empty() {
                cells.insert((i, k + 1), c.parse().unwrap());
            }
        }
    }
    cells
}

#[test]
fn csv_and_latex_carry_the_same_numbers() {
    for (text, half) in [
        ("group:S4", false),
        ("double:S3", false),
        ("bismash:S4", false),
        ("bismash:S4", true),
    ] {
        let spec = parse_spec(text).unwrap();
        let t = compute_table(&build(&spec).unwrap()).unwrap();
        let (csv, tpn) = parse_csv_cells(&to_csv(&t, half)).unwrap();
        let tex = latex_cells(&to_latex(&t, &layout(&spec, half)));
        assert_eq!(csv, tex, "{text}");
        assert_eq!(tpn, t.group_tpn);
    }
}

#[test]
fn json_round_trips_real_tables() {
    for text in [
        "group:S3",
        "dualgroup:A4",
        "double:S3",
        "tensor(group:C2,group:C3)",
    ] {
        let t = compute_table(&build(&parse_spec(text).unwrap()).unwrap()).unwrap();
        assert_eq!(table_from_json(&to_json(text, &t)).unwrap(), t, "{text}");
    }
}

fn group_name() -> impl Strategy<Value = String> {
    prop_oneof![
        (1..=MAX_SYMMETRIC_DEGREE).prop_map(|k| format!("S{k}")),
        (3..=MAX_SYMMETRIC_DEGREE).prop_map(|k| format!("A{k}")),
        (1..=MAX_CYCLIC_ORDER).prop_map(|k| format!("C{k}")),
    ]
}

fn spec_text() -> impl Strategy<Value = String> {
    let leaf = prop_oneof![
        group_name().prop_map(|g| format!("group:{g}")),
        group_name().prop_map(|g| format!("dualgroup:{g}")),
        group_name().prop_map(|g| format!("double:{g}")),
        prop_oneof![Just("S3"), Just("S4"), Just("S5"), Just("A5"), Just("A7")]
            .prop_map(|g| format!("bismash:{g}")),
    ];
    leaf.prop_recursive(3, 8, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("tensor({a},{b})")),
            inner.clone().prop_map(|a| format!("dual({a})")),
            inner.prop_map(|a| format!("op({a})")),
        ]
    })
}

proptest! {
    #[test]
    fn spec_display_round_trips(text in spec_text()) {
        match parse_spec(&text) {
            Ok(spec) => {
                prop_assert_eq!(spec.to_string(), text.clone());
                let again: AlgebraSpec = spec.to_string().parse().unwrap();
                prop_assert_eq!(again, spec);
            }
            // only the dimension cap may reject a well-formed spec
            Err(e) => prop_assert!(matches!(e, hopfpow_core::Error::ResourceLimit(_)), "{text}: {e}"),
        }
    }
}
