//! The twenty-four standard pieces and the reduction of labelled squares.
//!
//! Corners are always listed as `(bottom_left, bottom_right, top_right, top_left)`.
//! With that order the code letters follow the lexicographic order of the
//! corner permutations: `A = 1234`, `B = 1243`, ..., `Z = 4321`.

use std::fmt;

use crate::error::{Error, Result};

/// Code letters in table order. `I` and `O` are never used.
pub const CODES: [char; 24] = [
    'A', 'B', 'C', 'D', 'E', 'F', 'G', 'H', 'J', 'K', 'L', 'M', 'N', 'P', 'Q', 'R', 'S', 'T', 'U',
    'V', 'W', 'X', 'Y', 'Z',
];

const CORNERS: [[u8; 4]; 24] = build_corner_table();

const fn build_corner_table() -> [[u8; 4]; 24] {
    let mut table = [[0u8; 4]; 24];
    let mut idx = 0;
    let mut a = 1;
    while a <= 4 {
        let mut b = 1;
        while b <= 4 {
            let mut c = 1;
            while c <= 4 {
                if a != b && a != c && b != c {
                    table[idx] = [a, b, c, 10 - a - b - c];
                    idx += 1;
                }
                c += 1;
            }
            b += 1;
        }
        a += 1;
    }
    table
}

/// Sign of a vertical edge of a piece.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ColumnSign {
    /// bottom label < top label
    Up,
    /// bottom label > top label
    Down,
}

/// A standard piece. The wrapped index is the position in table order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Piece(u8);

impl Piece {
    pub const COUNT: usize = 24;

    pub fn all() -> impl Iterator<Item = Piece> + Clone {
        (0..Self::COUNT as u8).map(Piece)
    }

    pub fn from_index(index: usize) -> Option<Piece> {
        (index < Self::COUNT).then_some(Piece(index as u8))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn from_code(code: char) -> Result<Piece> {
        CODES
            .iter()
            .position(|&c| c == code)
            .map(|i| Piece(i as u8))
            .ok_or(Error::UnknownCode(code))
    }

    pub fn code(self) -> char {
        CODES[self.index()]
    }

    /// Builds a piece from corners that already form a permutation of 1..=4.
    pub fn from_corners(corners: [u8; 4]) -> Result<Piece> {
        CORNERS
            .iter()
            .position(|c| *c == corners)
            .map(|i| Piece(i as u8))
            .ok_or(Error::NotAPermutation(corners))
    }

    pub fn corners(self) -> [u8; 4] {
        CORNERS[self.index()]
    }

    pub fn bottom_left(self) -> u8 {
        self.corners()[0]
    }
    pub fn bottom_right(self) -> u8 {
        self.corners()[1]
    }
    pub fn top_right(self) -> u8 {
        self.corners()[2]
    }
    pub fn top_left(self) -> u8 {
        self.corners()[3]
    }

    /// Exchanges the left and right columns.
    pub fn swap_columns(self) -> Piece {
        let [bl, br, tr, tl] = self.corners();
        Self::known([br, bl, tl, tr])
    }

    /// Exchanges the top and bottom rows.
    pub fn swap_rows(self) -> Piece {
        let [bl, br, tr, tl] = self.corners();
        Self::known([tl, tr, br, bl])
    }

    /// Replaces every label `a` by `5 - a`.
    pub fn complement(self) -> Piece {
        Self::known(self.corners().map(|a| 5 - a))
    }

    /// Signs of the (left, right) columns.
    pub fn column_signs(self) -> (ColumnSign, ColumnSign) {
        let [bl, br, tr, tl] = self.corners();
        let sign = |bottom: u8, top: u8| {
            if bottom < top {
                ColumnSign::Up
            } else {
                ColumnSign::Down
            }
        };
        (sign(bl, tl), sign(br, tr))
    }

    fn known(corners: [u8; 4]) -> Piece {
        Piece::from_corners(corners).expect("transform of a permutation is a permutation")
    }
}

impl fmt::Debug for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code())
    }
}

impl fmt::Display for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code())
    }
}

/// Four pairwise-distinct positive labels in corner order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CornerQuad([u32; 4]);

impl CornerQuad {
    pub fn new(values: [u32; 4]) -> Result<CornerQuad> {
        for i in 0..4 {
            for j in i + 1..4 {
                if values[i] == values[j] {
                    return Err(Error::DuplicateLabel(values));
                }
            }
        }
        Ok(CornerQuad(values))
    }

    pub fn values(&self) -> [u32; 4] {
        self.0
    }

    /// Rank transform onto `{1,2,3,4}`.
    pub fn reduce(&self) -> Piece {
        let v = self.0;
        let ranks = v.map(|x| 1 + v.iter().filter(|&&y| y < x).count() as u8);
        Piece::known(ranks)
    }
}

/// Reduces four distinct labels to the standard piece with the same relative order.
pub fn reduce(values: [u32; 4]) -> Result<Piece> {
    CornerQuad::new(values).map(|q| q.reduce())
}
