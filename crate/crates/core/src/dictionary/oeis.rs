use std::collections::hash_map::DefaultHasher;
use std::collections::BTreeSet;
use std::fmt;
use std::fs::File;
use std::hash::{Hash, Hasher};
use std::io::{BufRead, BufReader, Read};
use std::path::Path;

use flate2::read::GzDecoder;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Sequences from an OEIS "stripped" dump, indexed by consecutive term triples.
#[derive(Clone, Debug, Default)]
pub struct OeisTable {
    entries: Vec<(String, Vec<BigInt>)>,
    /// `(hash of terms[p..p+3], entry, p)`, sorted.
    index: Vec<(u64, u32, u32)>,
    skipped: usize,
}

const WINDOW: usize = 3;

fn window_hash<T: Hash>(w: &[T]) -> u64 {
    let mut h = DefaultHasher::new();
    w.hash(&mut h);
    h.finish()
}

fn parse_line(line: &str) -> Option<(String, Vec<BigInt>)> {
    let (id, rest) = line.split_once(char::is_whitespace)?;
    let digits = id.strip_prefix('A')?;
    if digits.len() != 6 || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let body = rest.trim().strip_prefix(',')?.strip_suffix(',')?;
    let terms = body
        .split(',')
        .map(|t| t.trim().parse::<BigInt>().ok())
        .collect::<Option<Vec<_>>>()?;
    Some((id.to_string(), terms))
}

impl OeisTable {
    /// Parses stripped-format text. Blank lines and `#` comments are ignored;
    /// any other unparsable line is counted in [`OeisTable::skipped`].
    pub fn from_reader<R: BufRead>(reader: R) -> Result<OeisTable> {
        let mut entries = Vec::new();
        let mut skipped = 0;
        for line in reader.lines() {
            let line = line?;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            match parse_line(line) {
                Some(e) => entries.push(e),
                None => skipped += 1,
            }
        }
        Ok(OeisTable::from_entries(entries, skipped))
    }

    pub fn from_entries(mut entries: Vec<(String, Vec<BigInt>)>, skipped: usize) -> OeisTable {
        entries.sort_by(|a, b| a.0.cmp(&b.0));
        let mut index = Vec::new();
        for (e, (_, terms)) in entries.iter().enumerate() {
            for (p, w) in terms.windows(WINDOW).enumerate() {
                index.push((window_hash(w), e as u32, p as u32));
            }
        }
        index.sort_unstable();
        OeisTable {
            entries,
            index,
            skipped,
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Malformed lines dropped while loading.
    pub fn skipped(&self) -> usize {
        self.skipped
    }

    pub fn get(&self, a_number: &str) -> Option<&[BigInt]> {
        self.entries
            .binary_search_by(|(id, _)| id.as_str().cmp(a_number))
            .ok()
            .map(|i| self.entries[i].1.as_slice())
    }

    pub fn entries(&self) -> impl Iterator<Item = (&str, &[BigInt])> {
        self.entries
            .iter()
            .map(|(id, t)| (id.as_str(), t.as_slice()))
    }

    /// Every `(A-number, start)` where `query` occurs contiguously.
    pub fn occurrences(&self, query: &[BigInt]) -> Vec<(&str, usize)> {
        let mut out = Vec::new();
        if query.len() < WINDOW {
            for (id, terms) in self.entries() {
                for p in 0..=terms.len().saturating_sub(query.len()) {
                    if terms.len() >= query.len() && terms[p..p + query.len()] == *query {
                        out.push((id, p));
                    }
                }
            }
            return out;
        }
        let h = window_hash(&query[..WINDOW]);
        let lo = self.index.partition_point(|&(x, _, _)| x < h);
        for &(x, e, p) in &self.index[lo..] {
            if x != h {
                break;
            }
            let (id, terms) = &self.entries[e as usize];
            let p = p as usize;
            if terms.len() >= p + query.len() && terms[p..p + query.len()] == *query {
                out.push((id.as_str(), p));
            }
        }
        out
    }
}

/// Loads a stripped dump, gzip-compressed or plain (detected by magic bytes).
pub fn oeis_load(path: impl AsRef<Path>) -> Result<OeisTable> {
    let path = path.as_ref();
    let mut file = BufReader::new(File::open(path)?);
    let gz = file.fill_buf()?.starts_with(&[0x1f, 0x8b]);
    let reader: Box<dyn Read> = if gz {
        Box::new(GzDecoder::new(file))
    } else {
        Box::new(file)
    };
    let table = OeisTable::from_reader(BufReader::new(reader))?;
    if table.is_empty() {
        return Err(Error::EmptyOeisTable(path.display().to_string()));
    }
    Ok(table)
}

/// A transform applied to a term vector before lookup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Normalization {
    Identity,
    DropLeading(usize),
    SubtractConstant(u32),
    #[serde(with = "crate::serde_big::one")]
    DivideCommonFactor(BigUint),
    /// Term at width n divided by `2^n`.
    DividePowerOfTwoIndex,
}

impl fmt::Display for Normalization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Normalization::Identity => f.write_str("identity"),
            Normalization::DropLeading(k) => write!(f, "drop {k} leading"),
            Normalization::SubtractConstant(c) => write!(f, "minus {c}"),
            Normalization::DivideCommonFactor(g) => write!(f, "divided by {g}"),
            Normalization::DividePowerOfTwoIndex => f.write_str("divided by 2^n"),
        }
    }
}

impl Normalization {
    /// `terms[i]` is taken to be the value at width `n_min + i`.
    pub fn apply(&self, terms: &[BigUint], n_min: usize) -> Option<Vec<BigUint>> {
        match self {
            Normalization::Identity => Some(terms.to_vec()),
            Normalization::DropLeading(k) => (*k <= terms.len()).then(|| terms[*k..].to_vec()),
            Normalization::SubtractConstant(c) => {
                let c = BigUint::from(*c);
                terms.iter().map(|t| (t >= &c).then(|| t - &c)).collect()
            }
            Normalization::DivideCommonFactor(g) => {
                if g.is_zero() {
                    return None;
                }
                terms
                    .iter()
                    .map(|t| {
                        let (q, r) = t.div_rem(g);
                        r.is_zero().then_some(q)
                    })
                    .collect()
            }
            Normalization::DividePowerOfTwoIndex => terms
                .iter()
                .enumerate()
                .map(|(i, t)| {
                    let n = n_min + i;
                    (t.trailing_zeros().unwrap_or(u64::MAX) >= n as u64).then(|| t >> n)
                })
                .collect(),
        }
    }

    /// Term-dependent normalisations worth reporting even without a hit.
    pub fn structural(terms: &[BigUint]) -> Vec<Normalization> {
        let mut out = Vec::new();
        let g = terms.iter().fold(BigUint::zero(), |g, t| g.gcd(t));
        if g > BigUint::one() {
            out.push(Normalization::DivideCommonFactor(g));
        }
        if !terms.is_empty() && terms.iter().all(|t| !t.is_zero()) {
            out.push(Normalization::DividePowerOfTwoIndex);
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchOptions {
    /// Queries shorter than this (after normalisation) are not looked up.
    pub min_terms: usize,
    pub max_drop: usize,
    pub constants: Vec<u32>,
}

impl Default for MatchOptions {
    fn default() -> Self {
        MatchOptions {
            min_terms: 6,
            max_drop: 3,
            constants: vec![1, 2],
        }
    }
}

impl MatchOptions {
    pub fn normalizations(&self, terms: &[BigUint]) -> Vec<Normalization> {
        let mut out = vec![Normalization::Identity];
        out.extend((1..=self.max_drop).map(Normalization::DropLeading));
        out.extend(
            self.constants
                .iter()
                .map(|&c| Normalization::SubtractConstant(c)),
        );
        out.extend(Normalization::structural(terms));
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OeisHit {
    pub a_number: String,
    pub normalization: Normalization,
    /// Zero-based position in the stored sequence where the match starts.
    pub offset: usize,
}

/// Looks `terms` (widths `n_min..`) up under each normalisation in turn.
/// An A-number is reported once, under the first normalisation that hits it.
pub fn oeis_match(
    terms: &[BigUint],
    n_min: usize,
    table: &OeisTable,
    options: &MatchOptions,
) -> Vec<OeisHit> {
    let mut seen = BTreeSet::new();
    let mut hits = Vec::new();
    for normalization in options.normalizations(terms) {
        let Some(query) = normalization.apply(terms, n_min) else {
            continue;
        };
        if query.len() < options.min_terms.max(1) {
            continue;
        }
        let query: Vec<BigInt> = query.into_iter().map(BigInt::from).collect();
        let mut found = table.occurrences(&query);
        found.sort();
        for (id, offset) in found {
            if seen.insert(id.to_string()) {
                hits.push(OeisHit {
                    a_number: id.to_string(),
                    normalization: normalization.clone(),
                    offset,
                });
            }
        }
    }
    hits
}
