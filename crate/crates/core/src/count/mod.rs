//! Exact counting of `P^n`, the 2 x n puzzles all of whose pieces lie in `P`.
//!
//! The dynamic program tracks the rightmost column. Removing that column
//! from a width-`n` puzzle and re-standardising its labels gives a width
//! `n-1` puzzle; the inverse reduction puts the old labels back around the
//! removed pair `{X, Y}`. Relative to `a = min(X,Y)` and `b = max(X,Y)` each
//! old label falls into one of three bands (below `a`, between, above `b`),
//! and the reduced piece of the new last window is fixed by the bands of the
//! previous column's two labels plus, inside one band, their order. A step is
//! then a handful of rectangle and triangle sums over the previous profile,
//! each O(1) after prefix sums.

mod oracle;
mod profile;

pub use oracle::{brute_force_count, Oracle, DEFAULT_ORACLE_BOUND};
pub use profile::{BoundaryProfile, SequenceTerms};

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::piece::Piece;
use crate::puzzle::Label;
use crate::support::Support;

/// Widest puzzle whose counts provably fit in `u128`: every cell is bounded
/// by `(2n)!` and `34! < 2^128`.
const U128_MAX_WIDTH: usize = 17;

/// Largest support accepted by [`exact_support_count`] (2^12 sub-counts).
pub const MAX_EXACT_SUPPORT: usize = 12;

/// Order-preserving injection of `1..=2n-2` into `1..=2n` minus `{X, Y}`.
pub fn inverse_reduction(x: Label, top: Label, bottom: Label, width: usize) -> Result<Label> {
    let m = 2 * width;
    let err = || Error::InverseReductionDomain {
        x,
        top,
        bottom,
        width,
    };
    if width < 2 || x == 0 || x as usize > m - 2 {
        return Err(err());
    }
    if top == bottom || top == 0 || bottom == 0 || top as usize > m || bottom as usize > m {
        return Err(err());
    }
    let (a, b) = (top.min(bottom), top.max(bottom));
    Ok(if x < a {
        x
    } else if x + 2 <= b {
        x + 1
    } else {
        x + 2
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Band {
    Low,
    Mid,
    High,
}

/// How a support piece constrains the previous column `(x, y)`.
#[derive(Clone, Copy, Debug)]
struct Window {
    band_x: Band,
    band_y: Band,
    /// For equal bands: whether `x < y` is required.
    x_below_y: bool,
}

/// Support pieces split by the orientation of the new column.
#[derive(Clone, Debug, Default)]
struct Transitions {
    top_below: Vec<Window>,
    top_above: Vec<Window>,
}

impl Transitions {
    fn new(support: Support) -> Transitions {
        let mut t = Transitions::default();
        for piece in support.pieces() {
            let [bl, br, tr, tl] = piece.corners();
            let band = |v: u8| match (v > tr) as u8 + (v > br) as u8 {
                0 => Band::Low,
                1 => Band::Mid,
                _ => Band::High,
            };
            let w = Window {
                band_x: band(tl),
                band_y: band(bl),
                x_below_y: tl < bl,
            };
            if tr < br {
                t.top_below.push(w);
            } else {
                t.top_above.push(w);
            }
        }
        t
    }
}

/// Arithmetic needed by the step: sums and differences of nonnegative counts.
trait Tally: Clone + Zero {
    fn plus(&self, o: &Self) -> Self;
    /// Caller guarantees `self >= o`.
    fn minus(&self, o: &Self) -> Self;
}

impl Tally for u128 {
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
}

impl Tally for BigUint {
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
}

/// Prefix tables over a profile of side `m`, all 1-based.
struct Sums<T> {
    side: usize,
    /// `rect[i][j]`: sum over `x <= i`, `y <= j`.
    rect: Vec<T>,
    /// Running sum over `y` of the cells with `x < y` in column `y`.
    above: Vec<T>,
    /// Running sum over `x` of the cells with `y < x` in row `x`.
    below: Vec<T>,
}

impl<T: Tally> Sums<T> {
    fn new(cells: &[T], m: usize) -> Sums<T> {
        let side = m + 1;
        let mut rect = vec![T::zero(); side * side];
        for x in 1..=m {
            let mut row = T::zero();
            for y in 1..=m {
                row = row.plus(&cells[(x - 1) * m + (y - 1)]);
                rect[x * side + y] = rect[(x - 1) * side + y].plus(&row);
            }
        }
        let mut above = vec![T::zero(); side];
        let mut below = vec![T::zero(); side];
        for k in 1..=m {
            let mut col = T::zero();
            let mut row = T::zero();
            for j in 1..k {
                col = col.plus(&cells[(j - 1) * m + (k - 1)]);
                row = row.plus(&cells[(k - 1) * m + (j - 1)]);
            }
            above[k] = above[k - 1].plus(&col);
            below[k] = below[k - 1].plus(&row);
        }
        Sums {
            side,
            rect,
            above,
            below,
        }
    }

    fn at(&self, i: usize, j: usize) -> &T {
        &self.rect[i * self.side + j]
    }

    /// Sum over `x in x0..=x1`, `y in y0..=y1`; empty ranges give zero.
    fn block(&self, (x0, x1): (usize, usize), (y0, y1): (usize, usize)) -> T {
        if x0 > x1 || y0 > y1 {
            return T::zero();
        }
        self.at(x1, y1)
            .plus(self.at(x0 - 1, y0 - 1))
            .minus(self.at(x0 - 1, y1))
            .minus(self.at(x1, y0 - 1))
    }

    /// Sum over `lo <= x < y <= hi`.
    fn upper(&self, (lo, hi): (usize, usize)) -> T {
        if lo > hi {
            return T::zero();
        }
        self.above[hi]
            .minus(&self.above[lo - 1])
            .minus(&self.block((1, lo - 1), (lo, hi)))
    }

    /// Sum over `lo <= y < x <= hi`.
    fn lower(&self, (lo, hi): (usize, usize)) -> T {
        if lo > hi {
            return T::zero();
        }
        self.below[hi]
            .minus(&self.below[lo - 1])
            .minus(&self.block((lo, hi), (1, lo - 1)))
    }
}

/// One DP step from a profile over `m` labels to one over `m + 2` labels.
fn step<T: Tally>(prev: &[T], m: usize, transitions: &Transitions) -> Vec<T> {
    let sums = Sums::new(prev, m);
    let side = m + 2;
    let mut next = vec![T::zero(); side * side];
    for top in 1..=side {
        for bottom in 1..=side {
            if top == bottom {
                continue;
            }
            let (a, b) = (top.min(bottom), top.max(bottom));
            let interval = |band: Band| match band {
                Band::Low => (1, a - 1),
                Band::Mid => (a, b - 2),
                Band::High => (b - 1, m),
            };
            let windows = if top < bottom {
                &transitions.top_below
            } else {
                &transitions.top_above
            };
            let mut acc = T::zero();
            for w in windows {
                let part = if w.band_x != w.band_y {
                    sums.block(interval(w.band_x), interval(w.band_y))
                } else if w.x_below_y {
                    sums.upper(interval(w.band_x))
                } else {
                    sums.lower(interval(w.band_x))
                };
                acc = acc.plus(&part);
            }
            next[(top - 1) * side + (bottom - 1)] = acc;
        }
    }
    next
}

fn base_cells<T: Tally>(one: T) -> Vec<T> {
    vec![T::zero(), one.clone(), one, T::zero()]
}

/// Runs the DP to `width`, calling `at_width` after every step with the width
/// and the profile cells.
fn run<T: Tally>(support: Support, width: usize, one: T, mut at_width: impl FnMut(usize, &[T])) {
    let transitions = Transitions::new(support);
    let mut cells = base_cells(one);
    at_width(1, &cells);
    for w in 2..=width {
        cells = step(&cells, 2 * (w - 1), &transitions);
        at_width(w, &cells);
    }
}

fn require_width(width: usize, min: usize) -> Result<()> {
    if width < min {
        return Err(Error::WidthTooSmall { width, min });
    }
    Ok(())
}

/// Advances a profile by one column.
pub fn dp_step(prev: &BoundaryProfile, support: Support) -> BoundaryProfile {
    let transitions = Transitions::new(support);
    let cells = step(prev.cells(), prev.labels(), &transitions);
    BoundaryProfile::from_cells(prev.width() + 1, cells)
}

/// The boundary profile of `P^n`.
pub fn profile(support: Support, width: usize) -> Result<BoundaryProfile> {
    require_width(width, 1)?;
    let mut out = None;
    if width <= U128_MAX_WIDTH {
        run(support, width, 1u128, |w, cells| {
            if w == width {
                out = Some(cells.iter().map(|&c| BigUint::from(c)).collect());
            }
        });
    } else {
        run(support, width, BigUint::from(1u8), |w, cells| {
            if w == width {
                out = Some(cells.to_vec());
            }
        });
    }
    Ok(BoundaryProfile::from_cells(
        width,
        out.expect("width reached"),
    ))
}

/// `|P^n|`.
pub fn dp_count(support: Support, width: usize) -> Result<BigUint> {
    require_width(width, 2)?;
    Ok(sequence(support, width, width)?.terms.remove(0))
}

/// `|P^n|` for `n_min ..= n_max`, from a single DP run.
pub fn sequence(support: Support, n_min: usize, n_max: usize) -> Result<SequenceTerms> {
    require_width(n_min, 2)?;
    require_width(n_max, n_min)?;
    let mut terms = Vec::with_capacity(n_max - n_min + 1);
    if n_max <= U128_MAX_WIDTH {
        run(support, n_max, 1u128, |w, cells| {
            if w >= n_min {
                terms.push(BigUint::from(cells.iter().sum::<u128>()));
            }
        });
    } else {
        run(support, n_max, BigUint::from(1u8), |w, cells| {
            if w >= n_min {
                terms.push(cells.iter().sum());
            }
        });
    }
    Ok(SequenceTerms {
        support,
        n_min,
        terms,
    })
}

/// Number of width-`n` puzzles whose minimal support is exactly `support`,
/// by inclusion-exclusion over its subsets.
pub fn exact_support_count(support: Support, width: usize) -> Result<BigUint> {
    require_width(width, 2)?;
    if support.len() > MAX_EXACT_SUPPORT {
        return Err(Error::SupportSize(support.len()));
    }
    let full = support.mask();
    let mut acc = BigInt::zero();
    let mut sub = full;
    while sub != 0 {
        let s = Support::from_mask(sub)?;
        let term = BigInt::from(dp_count(s, width)?);
        if (full.count_ones() - sub.count_ones()).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
        sub = (sub - 1) & full;
    }
    Ok(acc
        .to_biguint()
        .expect("inclusion-exclusion count is nonnegative"))
}

/// The reduced piece the proposition's quad forms for previous column
/// `(x, y)` and new column `(X, Y)`.
pub fn joining_piece(x: Label, y: Label, top: Label, bottom: Label, width: usize) -> Result<Piece> {
    let x1 = inverse_reduction(x, top, bottom, width)?;
    let y1 = inverse_reduction(y, top, bottom, width)?;
    crate::piece::reduce([y1, bottom, top, x1].map(u32::from))
}
