//! Brute-force enumeration of `P^n`, used as an independent check on the DP.

use std::ops::ControlFlow;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::piece::Piece;
use crate::puzzle::{window_piece, Label, Puzzle};
use crate::support::Support;

pub const DEFAULT_ORACLE_BOUND: usize = 6;

/// Column-by-column backtracking over label assignments. Each window is
/// checked against the support as soon as its right column is placed.
#[derive(Clone, Copy, Debug)]
pub struct Oracle {
    bound: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            bound: DEFAULT_ORACLE_BOUND,
        }
    }
}

impl Oracle {
    /// Widths above 15 would overflow the label bitset.
    pub fn with_bound(bound: usize) -> Oracle {
        Oracle {
            bound: bound.min(15),
        }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    fn check(&self, width: usize) -> Result<()> {
        if width == 0 {
            return Err(Error::WidthTooSmall { width, min: 1 });
        }
        if width > self.bound {
            return Err(Error::OracleBound {
                width,
                bound: self.bound,
            });
        }
        Ok(())
    }

    /// Visits every puzzle of `P^n` as `(top, bottom)` rows until `visit` breaks.
    pub fn walk<B>(
        &self,
        support: Support,
        width: usize,
        mut visit: impl FnMut(&[Label], &[Label]) -> ControlFlow<B>,
    ) -> Result<Option<B>> {
        self.check(width)?;
        let mut state = Walk {
            support,
            width,
            labels: 2 * width as Label,
            top: vec![0; width],
            bottom: vec![0; width],
            used: 0,
        };
        Ok(match state.column(0, &mut visit) {
            ControlFlow::Break(b) => Some(b),
            ControlFlow::Continue(()) => None,
        })
    }

    pub fn count(&self, support: Support, width: usize) -> Result<BigUint> {
        let mut count: u64 = 0;
        self.walk::<()>(support, width, |_, _| {
            count += 1;
            ControlFlow::Continue(())
        })?;
        Ok(BigUint::from(count))
    }

    /// All puzzles of `P^n`, in the order the search meets them.
    pub fn enumerate(&self, support: Support, width: usize) -> Result<Vec<Puzzle>> {
        let mut out = Vec::new();
        self.walk::<()>(support, width, |t, b| {
            out.push(Puzzle::from_rows_unchecked(t.to_vec(), b.to_vec()));
            ControlFlow::Continue(())
        })?;
        Ok(out)
    }

    /// A puzzle of `P^n`, `3 <= n <= max_width`, containing both pieces.
    pub fn witness(
        &self,
        support: Support,
        first: Piece,
        second: Piece,
        max_width: usize,
    ) -> Result<Option<Puzzle>> {
        for width in 3..=max_width.min(self.bound) {
            let found = self.walk(support, width, |t, b| {
                let (mut has_first, mut has_second) = (false, false);
                for i in 0..width - 1 {
                    let p = window_piece(t, b, i);
                    has_first |= p == first;
                    has_second |= p == second;
                }
                if has_first && has_second {
                    ControlFlow::Break(Puzzle::from_rows_unchecked(t.to_vec(), b.to_vec()))
                } else {
                    ControlFlow::Continue(())
                }
            })?;
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }
}

/// Convenience wrapper using the default bound.
pub fn brute_force_count(support: Support, width: usize) -> Result<BigUint> {
    Oracle::default().count(support, width)
}

struct Walk {
    support: Support,
    width: usize,
    labels: Label,
    top: Vec<Label>,
    bottom: Vec<Label>,
    used: u32,
}

impl Walk {
    fn column<B>(
        &mut self,
        col: usize,
        visit: &mut impl FnMut(&[Label], &[Label]) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        if col == self.width {
            return visit(&self.top, &self.bottom);
        }
        for t in 1..=self.labels {
            let tb = 1u32 << t;
            if self.used & tb != 0 {
                continue;
            }
            for b in 1..=self.labels {
                let bb = 1u32 << b;
                if b == t || self.used & bb != 0 {
                    continue;
                }
                self.top[col] = t;
                self.bottom[col] = b;
                if col > 0
                    && !self
                        .support
                        .contains(window_piece(&self.top, &self.bottom, col - 1))
                {
                    continue;
                }
                self.used |= tb | bb;
                let flow = self.column(col + 1, visit);
                self.used &= !(tb | bb);
                flow?;
            }
        }
        ControlFlow::Continue(())
    }
}
