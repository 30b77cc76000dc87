#![allow(dead_code)]

use num_bigint::BigUint;
use stdpuzzle::Support;

pub struct Entry {
    pub code: Support,
    pub see_also: Vec<Support>,
    pub seq: Vec<BigUint>,
    pub var: Vec<BigUint>,
    pub oeis: Option<String>,
}

fn nums(field: &str) -> Vec<BigUint> {
    field
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse().unwrap())
        .collect()
}

/// Printed dictionary entries; sequences start at n = 2.
pub fn dictionary() -> Vec<Entry> {
    include_str!("../fixtures/dictionary.txt")
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|line| {
            let f: Vec<&str> = line.split('|').collect();
            assert_eq!(f.len(), 5, "{line}");
            Entry {
                code: f[0].parse().unwrap(),
                see_also: f[1]
                    .split(',')
                    .filter(|s| !s.is_empty())
                    .map(|s| s.parse().unwrap())
                    .collect(),
                seq: nums(f[2]),
                var: nums(f[3]),
                oeis: (!f[4].is_empty()).then(|| f[4].to_string()),
            }
        })
        .collect()
}

pub fn entry(code: &str) -> Entry {
    let s: Support = code.parse().unwrap();
    dictionary().into_iter().find(|e| e.code == s).unwrap()
}

pub fn big(v: &[u64]) -> Vec<BigUint> {
    v.iter().map(|&x| BigUint::from(x)).collect()
}
