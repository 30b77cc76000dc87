use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::puzzle::Label;
use crate::support::Support;

/// Counts of width-`n` puzzles keyed by their rightmost column `(X, Y)`,
/// `X` on top, `Y` at the bottom.
#[derive(Clone, PartialEq, Eq)]
pub struct BoundaryProfile {
    width: usize,
    /// Row-major over `(X-1, Y-1)`, side `2 * width`; the diagonal stays zero.
    cells: Vec<BigUint>,
}

impl BoundaryProfile {
    /// The two standard single columns, `1` over `2` and `2` over `1`.
    pub fn base() -> BoundaryProfile {
        BoundaryProfile {
            width: 1,
            cells: vec![Zero::zero(), One::one(), One::one(), Zero::zero()],
        }
    }

    pub(crate) fn from_cells(width: usize, cells: Vec<BigUint>) -> BoundaryProfile {
        debug_assert_eq!(cells.len(), 4 * width * width);
        BoundaryProfile { width, cells }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Number of labels, `2n`.
    pub fn labels(&self) -> usize {
        2 * self.width
    }

    pub(crate) fn cells(&self) -> &[BigUint] {
        &self.cells
    }

    pub fn get(&self, top: Label, bottom: Label) -> Result<&BigUint> {
        let m = self.labels();
        let (x, y) = (top as usize, bottom as usize);
        if x == y || x == 0 || y == 0 || x > m || y > m {
            return Err(Error::BoundaryLabels {
                top,
                bottom,
                max: m,
            });
        }
        Ok(&self.cells[(x - 1) * m + (y - 1)])
    }

    /// Nonzero cells as `(X, Y, count)`, sorted by `(X, Y)`.
    pub fn nonzero(&self) -> impl Iterator<Item = (Label, Label, &BigUint)> {
        let m = self.labels();
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| ((i / m + 1) as Label, (i % m + 1) as Label, c))
    }

    /// Sum over all cells: the number of width-`n` puzzles.
    pub fn total(&self) -> BigUint {
        self.cells.iter().sum()
    }
}

impl std::fmt::Debug for BoundaryProfile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map()
            .entries(self.nonzero().map(|(x, y, c)| ((x, y), c.to_string())))
            .finish()
    }
}

/// Exact terms of `|P^n|` for `n_min ..= n_max`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceTerms {
    pub support: Support,
    pub n_min: usize,
    #[serde(with = "crate::serde_big::vec")]
    pub terms: Vec<BigUint>,
}

impl SequenceTerms {
    pub fn n_max(&self) -> usize {
        self.n_min + self.terms.len() - 1
    }

    pub fn term(&self, n: usize) -> Option<&BigUint> {
        n.checked_sub(self.n_min).and_then(|i| self.terms.get(i))
    }
}
