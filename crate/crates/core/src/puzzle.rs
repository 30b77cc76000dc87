//! Two-row standard puzzles.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::piece::{CornerQuad, Piece};
use crate::support::Support;

/// A puzzle label. Widths stay far below `u16::MAX / 2`.
pub type Label = u16;

/// True iff the `2n` labels of the two rows are exactly `1..=2n`.
pub fn is_standard(top: &[Label], bottom: &[Label]) -> bool {
    if top.len() != bottom.len() {
        return false;
    }
    let m = 2 * top.len();
    let mut seen = vec![false; m + 1];
    for &label in top.iter().chain(bottom) {
        let l = label as usize;
        if l == 0 || l > m || seen[l] {
            return false;
        }
        seen[l] = true;
    }
    true
}

/// A standard puzzle of shape `2 x n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Puzzle {
    top: Vec<Label>,
    bottom: Vec<Label>,
}

impl Puzzle {
    pub fn new(top: Vec<Label>, bottom: Vec<Label>) -> Result<Puzzle> {
        if top.len() != bottom.len() {
            return Err(Error::RowLengthMismatch {
                top: top.len(),
                bottom: bottom.len(),
            });
        }
        if top.is_empty() {
            return Err(Error::EmptyPuzzle);
        }
        if !is_standard(&top, &bottom) {
            return Err(Error::NotStandard(2 * top.len()));
        }
        Ok(Puzzle { top, bottom })
    }

    /// Caller guarantees the rows are standard.
    pub(crate) fn from_rows_unchecked(top: Vec<Label>, bottom: Vec<Label>) -> Puzzle {
        debug_assert!(is_standard(&top, &bottom));
        Puzzle { top, bottom }
    }

    pub fn width(&self) -> usize {
        self.top.len()
    }

    pub fn top(&self) -> &[Label] {
        &self.top
    }

    pub fn bottom(&self) -> &[Label] {
        &self.bottom
    }

    /// The rightmost column as `(top, bottom)`.
    pub fn last_column(&self) -> (Label, Label) {
        let n = self.width();
        (self.top[n - 1], self.bottom[n - 1])
    }

    /// Reduced piece of columns `(i, i+1)`, zero-based `i`.
    pub fn piece_at(&self, i: usize) -> Piece {
        window_piece(&self.top, &self.bottom, i)
    }

    /// The `n-1` reduced pieces, left to right. Empty for width 1.
    pub fn pieces(&self) -> Vec<Piece> {
        (0..self.width().saturating_sub(1))
            .map(|i| self.piece_at(i))
            .collect()
    }

    /// The set of distinct pieces. `None` for a single column.
    pub fn minimal_support(&self) -> Option<Support> {
        Support::from_pieces(self.pieces()).ok()
    }

    pub(crate) fn rows_mut(&mut self) -> (&mut [Label], &mut [Label]) {
        (&mut self.top, &mut self.bottom)
    }
}

pub(crate) fn window_piece(top: &[Label], bottom: &[Label], i: usize) -> Piece {
    let quad = [bottom[i], bottom[i + 1], top[i + 1], top[i]].map(u32::from);
    CornerQuad::new(quad)
        .expect("labels of a standard puzzle are distinct")
        .reduce()
}

/// Free-function form of [`Puzzle::pieces`].
pub fn pieces_of(p: &Puzzle) -> Vec<Piece> {
    p.pieces()
}

/// Free-function form of [`Puzzle::minimal_support`].
pub fn minimal_support(p: &Puzzle) -> Option<Support> {
    p.minimal_support()
}

fn join(labels: &[Label]) -> String {
    labels
        .iter()
        .map(|l| l.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Literal form `top/bottom`, e.g. `5,7,8,4/1,2,3,6`.
impl fmt::Display for Puzzle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", join(&self.top), join(&self.bottom))
    }
}

impl fmt::Debug for Puzzle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Puzzle({self})")
    }
}

impl FromStr for Puzzle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Puzzle> {
        let bad = || Error::PuzzleLiteral(s.to_string());
        let (top, bottom) = s.trim().split_once('/').ok_or_else(bad)?;
        let row = |r: &str| -> Result<Vec<Label>> {
            r.split(',')
                .map(|t| t.trim().parse::<Label>().map_err(|_| bad()))
                .collect()
        };
        Puzzle::new(row(top)?, row(bottom)?)
    }
}
