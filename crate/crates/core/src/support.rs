//! Supports, the T1/T2/T3 equivalence group, and connectivity.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::piece::{ColumnSign, Piece};

const ALL_MASK: u32 = (1 << Piece::COUNT) - 1;

/// A nonempty set of pieces, stored as a bitmask in table order.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Support(u32);

impl Support {
    pub fn from_mask(mask: u32) -> Result<Support> {
        if mask == 0 {
            return Err(Error::EmptySupport);
        }
        Ok(Support(mask & ALL_MASK))
    }

    /// Collects pieces into a support, merging repeats.
    pub fn from_pieces<I: IntoIterator<Item = Piece>>(pieces: I) -> Result<Support> {
        Support::from_mask(pieces.into_iter().fold(0, |m, p| m | 1 << p.index()))
    }

    pub fn single(piece: Piece) -> Support {
        Support(1 << piece.index())
    }

    /// Every one of the 24 pieces.
    pub fn full() -> Support {
        Support(ALL_MASK)
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, piece: Piece) -> bool {
        self.0 & (1 << piece.index()) != 0
    }

    pub fn is_subset_of(self, other: Support) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn pieces(self) -> impl Iterator<Item = Piece> {
        Piece::all().filter(move |p| self.contains(*p))
    }

    /// Code letters in ascending order.
    pub fn name(self) -> String {
        self.pieces().map(Piece::code).collect()
    }

    fn map(self, f: impl Fn(Piece) -> Piece) -> Support {
        Support(self.pieces().fold(0, |m, p| m | 1 << f(p).index()))
    }

    /// T1: exchange left and right columns in every piece.
    pub fn t1(self) -> Support {
        self.map(Piece::swap_columns)
    }

    /// T2: exchange top and bottom rows in every piece.
    pub fn t2(self) -> Support {
        self.map(Piece::swap_rows)
    }

    /// T3: replace each label `a` by `5 - a` in every piece.
    pub fn t3(self) -> Support {
        self.map(Piece::complement)
    }

    /// The eight images under the group generated by T1, T2, T3
    /// (with repeats when the support has a nontrivial stabiliser).
    pub fn images(self) -> [Support; 8] {
        let mut out = [self; 8];
        for (k, slot) in out.iter_mut().enumerate() {
            let mut s = self;
            if k & 1 != 0 {
                s = s.t1();
            }
            if k & 2 != 0 {
                s = s.t2();
            }
            if k & 4 != 0 {
                s = s.t3();
            }
            *slot = s;
        }
        out
    }

    /// The lexicographically smallest name in the orbit.
    pub fn canonical(self) -> Support {
        self.images()
            .into_iter()
            .min_by(|a, b| a.name_cmp(*b))
            .expect("eight images")
    }

    /// Orders supports by their sorted-letter names.
    pub fn name_cmp(self, other: Support) -> Ordering {
        self.pieces().cmp(other.pieces())
    }
}

impl PartialOrd for Support {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Support {
    fn cmp(&self, other: &Self) -> Ordering {
        self.name_cmp(*other)
    }
}

impl fmt::Display for Support {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl fmt::Debug for Support {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Support({})", self.name())
    }
}

impl FromStr for Support {
    type Err = Error;

    /// Parses a literal such as `BJTV`. Letter order is free; repeats are rejected.
    fn from_str(s: &str) -> Result<Support> {
        let mut mask = 0u32;
        for c in s.trim().chars() {
            let piece = Piece::from_code(c)?;
            let bit = 1 << piece.index();
            if mask & bit != 0 {
                return Err(Error::DuplicatePiece(c));
            }
            mask |= bit;
        }
        Support::from_mask(mask)
    }
}

impl Serialize for Support {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.name())
    }
}

impl<'de> Deserialize<'de> for Support {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let name = String::deserialize(d)?;
        name.parse().map_err(serde::de::Error::custom)
    }
}

/// An equivalence class of supports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportClass {
    pub canonical: Support,
    /// Distinct orbit members, sorted by name.
    pub members: Vec<Support>,
    pub size: usize,
}

pub fn orbit(s: Support) -> SupportClass {
    let mut members = s.images().to_vec();
    members.sort();
    members.dedup();
    SupportClass {
        canonical: members[0],
        members,
        size: s.len(),
    }
}

pub fn column_signs(p: Piece) -> (ColumnSign, ColumnSign) {
    p.column_signs()
}

/// False iff the support has one of the three disconnected forms:
/// up/up pieces together with down/down pieces and nothing else,
/// or only up/down pieces (two or more), or only down/up pieces (two or more).
/// Singletons are connected.
pub fn is_connected(s: Support) -> bool {
    use ColumnSign::*;
    if s.len() <= 1 {
        return true;
    }
    let (mut up_up, mut down_down, mut up_down, mut down_up) = (0, 0, 0, 0);
    for p in s.pieces() {
        match p.column_signs() {
            (Up, Up) => up_up += 1,
            (Down, Down) => down_down += 1,
            (Up, Down) => up_down += 1,
            (Down, Up) => down_up += 1,
        }
    }
    let form_a = up_up > 0 && down_down > 0 && up_down == 0 && down_up == 0;
    let form_b = up_down == s.len();
    let form_c = down_up == s.len();
    !(form_a || form_b || form_c)
}

/// Invokes `visit` on every `size`-subset of the 24 pieces, as a bitmask.
fn for_each_subset(size: usize, mut visit: impl FnMut(u32)) {
    if size == 0 || size > Piece::COUNT {
        return;
    }
    // Gosper's hack over 24-bit masks.
    let mut mask: u32 = (1 << size) - 1;
    while mask <= ALL_MASK {
        visit(mask);
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
}

/// Canonical representatives of the connected classes of the given size,
/// sorted by canonical name.
pub fn enumerate_connected_classes(size: usize) -> Result<Vec<SupportClass>> {
    if !(1..=Piece::COUNT).contains(&size) {
        return Err(Error::SupportSize(size));
    }
    let mut out = Vec::new();
    for_each_subset(size, |mask| {
        let s = Support(mask);
        if s.canonical() == s && is_connected(s) {
            out.push(orbit(s));
        }
    });
    out.sort_by_key(|c| c.canonical);
    Ok(out)
}

/// Number of connected classes of every size, without materialising orbits.
pub fn count_connected_classes(size: usize) -> Result<usize> {
    if !(1..=Piece::COUNT).contains(&size) {
        return Err(Error::SupportSize(size));
    }
    let mut count = 0;
    for_each_subset(size, |mask| {
        let s = Support(mask);
        if s.canonical() == s && is_connected(s) {
            count += 1;
        }
    });
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(lit: &str) -> Support {
        lit.parse().unwrap()
    }

    #[test]
    fn literals() {
        assert_eq!(s("VJTB").name(), "BJTV");
        assert!(matches!(
            "BB".parse::<Support>(),
            Err(Error::DuplicatePiece('B'))
        ));
        assert!(matches!("".parse::<Support>(), Err(Error::EmptySupport)));
        assert!(matches!(
            "QI".parse::<Support>(),
            Err(Error::UnknownCode('I'))
        ));
    }

    #[test]
    fn transformation_examples() {
        assert_eq!(s("AB").t1(), s("GH"));
        assert_eq!(s("AB").t2(), s("TZ"));
        assert_eq!(s("AB").t3(), s("YZ"));
        assert_eq!(s("A").t1(), s("H"));
        assert_eq!(s("A").t3(), s("Z"));
        assert_eq!(s("V").t2(), s("J"));
        let x = s("BJTV");
        assert_eq!(x.t1().t1(), x);
        assert_eq!(x.t2().t2(), x);
        assert_eq!(x.t3().t3(), x);
    }

    #[test]
    fn orbit_of_ab() {
        let class = orbit(s("AB"));
        let names: Vec<String> = class.members.iter().map(|m| m.name()).collect();
        let mut expected = vec!["AB", "TZ", "GH", "SY", "YZ", "AG", "ST", "BH"];
        expected.sort();
        assert_eq!(names, expected);
        assert_eq!(orbit(s("TZ")).canonical.name(), "AB");
        assert_eq!(orbit(s("AHSZ")).members, vec![s("AHSZ")]);
    }

    #[test]
    fn connectivity() {
        assert!(!is_connected(s("ABZ")));
        assert!(is_connected(s("BJTV")));
        assert!(is_connected(s("A")));
        assert!(is_connected(s("C")));
        assert!(!is_connected(s("CF")));
        assert!(!is_connected(s("UX")));
        assert!(is_connected(s("AC")));
    }

    #[test]
    fn name_order_matches_strings() {
        let supports = [
            "A", "AB", "ABC", "B", "BC", "AZ", "Z", "CK", "BJTV", "ACX", "ABZ",
        ];
        for x in supports {
            for y in supports {
                assert_eq!(s(x).cmp(&s(y)), x.cmp(y), "{x} vs {y}");
            }
        }
    }

    #[test]
    fn small_class_counts() {
        assert_eq!(enumerate_connected_classes(1).unwrap().len(), 6);
        assert_eq!(enumerate_connected_classes(2).unwrap().len(), 37);
        assert!(enumerate_connected_classes(0).is_err());
        assert!(enumerate_connected_classes(25).is_err());
    }
}
