//! The bundled test corpus: S3, D4, Q8, A4, D5, S4, A5.

use super::{parse_group_json, FiniteGroup, DEFAULT_ORDER_CAP};

pub const CORPUS: &[(&str, &str)] = &[
    ("S3", include_str!("../../data/groups/s3.json")),
    ("D4", include_str!("../../data/groups/d4.json")),
    ("Q8", include_str!("../../data/groups/q8.json")),
    ("A4", include_str!("../../data/groups/a4.json")),
    ("D5", include_str!("../../data/groups/d5.json")),
    ("S4", include_str!("../../data/groups/s4.json")),
    ("A5", include_str!("../../data/groups/a5.json")),
];

pub fn corpus_group(name: &str) -> Option<FiniteGroup> {
    CORPUS
        .iter()
        .find(|(n, _)| n.eq_ignore_ascii_case(name))
        .map(|(_, json)| {
            parse_group_json(json, DEFAULT_ORDER_CAP).expect("bundled group files are valid")
        })
}

pub fn corpus() -> Vec<(&'static str, FiniteGroup)> {
    CORPUS
        .iter()
        .map(|(n, json)| {
            (
                *n,
                parse_group_json(json, DEFAULT_ORDER_CAP).expect("bundled group files are valid"),
            )
        })
        .collect()
}
