//! Census of connected support classes: one sequence per class, classes with
//! equal sequences cross-linked, plus normalised variants and OEIS hits.

mod oeis;
mod report;

pub use oeis::{oeis_load, oeis_match, MatchOptions, Normalization, OeisHit, OeisTable};
pub use report::{emit_report, parse_json_report, ReportFormat};

use std::collections::BTreeMap;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::count::sequence;
use crate::error::{Error, Result};
use crate::support::{enumerate_connected_classes, Support};

/// Largest class size accepted by [`census`].
pub const MAX_CENSUS_SIZE: usize = 5;

/// First width of every census sequence.
pub const CENSUS_N_MIN: usize = 2;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Variant {
    pub normalization: Normalization,
    #[serde(with = "crate::serde_big::vec")]
    pub terms: Vec<BigUint>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceRecord {
    pub canonical: Support,
    pub size: usize,
    pub n_min: usize,
    #[serde(with = "crate::serde_big::vec")]
    pub terms: Vec<BigUint>,
    pub see_also: Vec<Support>,
    pub variants: Vec<Variant>,
    pub oeis_hits: Vec<OeisHit>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Parallelism {
    Serial,
    /// Rayon's global pool.
    #[default]
    Auto,
    Threads(usize),
}

/// One record per connected class of `size` pieces, ordered by canonical
/// name, with terms for `n = 2..=n_max`.
pub fn census(size: usize, n_max: usize, parallel: Parallelism) -> Result<Vec<SequenceRecord>> {
    if !(1..=MAX_CENSUS_SIZE).contains(&size) {
        return Err(Error::SupportSize(size));
    }
    if n_max < CENSUS_N_MIN {
        return Err(Error::WidthTooSmall {
            width: n_max,
            min: CENSUS_N_MIN,
        });
    }
    let supports: Vec<Support> = enumerate_connected_classes(size)?
        .into_iter()
        .map(|c| c.canonical)
        .collect();
    let terms_of = |s: &Support| sequence(*s, CENSUS_N_MIN, n_max).map(|t| t.terms);
    let all_terms: Vec<Vec<BigUint>> = match parallel {
        Parallelism::Serial => supports.iter().map(terms_of).collect::<Result<_>>()?,
        Parallelism::Auto => supports.par_iter().map(terms_of).collect::<Result<_>>()?,
        Parallelism::Threads(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::Io(std::io::Error::other(e)))?
            .install(|| supports.par_iter().map(terms_of).collect::<Result<_>>())?,
    };

    let mut groups: BTreeMap<&[BigUint], Vec<Support>> = BTreeMap::new();
    for (s, t) in supports.iter().zip(&all_terms) {
        groups.entry(t.as_slice()).or_default().push(*s);
    }
    let mut records: Vec<SequenceRecord> = supports
        .iter()
        .zip(&all_terms)
        .map(|(&canonical, terms)| SequenceRecord {
            canonical,
            size,
            n_min: CENSUS_N_MIN,
            see_also: groups[terms.as_slice()]
                .iter()
                .copied()
                .filter(|&o| o != canonical)
                .collect(),
            variants: structural_variants(terms, CENSUS_N_MIN),
            terms: terms.clone(),
            oeis_hits: Vec::new(),
        })
        .collect();
    records.sort_by_key(|r| r.canonical);
    Ok(records)
}

/// Variants that depend only on the terms: a common factor and `/2^n`.
fn structural_variants(terms: &[BigUint], n_min: usize) -> Vec<Variant> {
    Normalization::structural(terms)
        .into_iter()
        .filter_map(|normalization| {
            normalization.apply(terms, n_min).map(|terms| Variant {
                normalization,
                terms,
            })
        })
        .collect()
}

/// Fills `oeis_hits` and adds a variant for every non-identity normalisation
/// that produced a hit.
pub fn attach_oeis(records: &mut [SequenceRecord], table: &OeisTable, options: &MatchOptions) {
    records.par_iter_mut().for_each(|r| {
        r.oeis_hits = oeis_match(&r.terms, r.n_min, table, options);
        for hit in &r.oeis_hits {
            if hit.normalization == Normalization::Identity
                || r.variants
                    .iter()
                    .any(|v| v.normalization == hit.normalization)
            {
                continue;
            }
            if let Some(terms) = hit.normalization.apply(&r.terms, r.n_min) {
                r.variants.push(Variant {
                    normalization: hit.normalization.clone(),
                    terms,
                });
            }
        }
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[Support]) -> Vec<String> {
        v.iter().map(|s| s.name()).collect()
    }

    #[test]
    fn size_one_groups() {
        let recs = census(1, 8, Parallelism::Serial).unwrap();
        let by: BTreeMap<String, &SequenceRecord> =
            recs.iter().map(|r| (r.canonical.name(), r)).collect();
        assert_eq!(recs.len(), 6);
        assert_eq!(names(&by["A"].see_also), ["D"]);
        assert_eq!(names(&by["C"].see_also), ["E", "F"]);
        assert_eq!(names(&by["E"].see_also), ["C", "F"]);
        assert!(by["B"].see_also.is_empty());
    }

    #[test]
    fn see_also_is_symmetric() {
        let recs = census(2, 7, Parallelism::Auto).unwrap();
        assert_eq!(recs.len(), 37);
        for r in &recs {
            assert!(!r.see_also.contains(&r.canonical));
            for o in &r.see_also {
                let other = recs.iter().find(|x| x.canonical == *o).unwrap();
                assert!(other.see_also.contains(&r.canonical));
                assert_eq!(other.terms, r.terms);
            }
        }
        let bc = recs.iter().find(|r| r.canonical.name() == "BC").unwrap();
        assert_eq!(names(&bc.see_also), ["BD"]);
    }

    #[test]
    fn serial_matches_threads() {
        let a = census(2, 6, Parallelism::Serial).unwrap();
        let b = census(2, 6, Parallelism::Threads(3)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn bounds() {
        assert!(census(0, 5, Parallelism::Serial).is_err());
        assert!(census(6, 5, Parallelism::Serial).is_err());
        assert!(census(1, 1, Parallelism::Serial).is_err());
    }

    #[test]
    fn bceg_has_power_of_two_variant() {
        let recs = census(4, 5, Parallelism::Auto).unwrap();
        let bceg = recs.iter().find(|r| r.canonical.name() == "BCEG").unwrap();
        let v = bceg
            .variants
            .iter()
            .find(|v| v.normalization == Normalization::DividePowerOfTwoIndex)
            .unwrap();
        let expect: Vec<BigUint> = [1u32, 3, 17, 155].map(BigUint::from).to_vec();
        assert_eq!(v.terms, expect);
    }
}
