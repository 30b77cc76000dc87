//! Flip maps and the normalisation of BGTY puzzles into BJRY puzzles.
//!
//! Flipping both columns of a piece maps `(B, G, T, Y)` to `(T, Y, B, G)`
//! and `(E, J, R, V)` to `(R, V, E, J)`, while flipping only the right
//! column maps `(B, G, T, Y)` to `(E, J, R, V)`. So a suffix flip starting
//! at column `i+1` turns the G or T at window `(i, i+1)` into J or R and
//! keeps every later window inside BGTY.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::piece::Piece;
use crate::puzzle::{Label, Puzzle};
use crate::support::Support;

/// A set of 1-based column positions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FlipSet(BTreeSet<usize>);

impl FlipSet {
    pub fn new<I: IntoIterator<Item = usize>>(positions: I) -> FlipSet {
        FlipSet(positions.into_iter().collect())
    }

    /// `{from, from+1, ..., to}`.
    pub fn range(from: usize, to: usize) -> FlipSet {
        FlipSet::new(from..=to)
    }

    pub fn positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for FlipSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

/// Swaps top and bottom labels at every position of `set`.
pub fn flip(p: &Puzzle, set: &FlipSet) -> Result<Puzzle> {
    let width = p.width();
    if let Some(bad) = set.positions().find(|&i| i == 0 || i > width) {
        return Err(Error::FlipOutOfRange {
            position: bad,
            width,
        });
    }
    let mut out = p.clone();
    let (top, bottom) = out.rows_mut();
    for i in set.positions() {
        std::mem::swap(&mut top[i - 1], &mut bottom[i - 1]);
    }
    Ok(out)
}

/// The 16 supports of `{B,E} x {G,J} x {T,R} x {Y,V}`, sorted by name.
pub fn gamma_family() -> Vec<Support> {
    let axes = [['B', 'E'], ['G', 'J'], ['T', 'R'], ['Y', 'V']];
    let mut out: Vec<Support> = (0..16u32)
        .map(|bits| {
            let pieces = axes
                .iter()
                .enumerate()
                .map(|(k, pair)| pair[(bits >> k & 1) as usize])
                .map(|c| Piece::from_code(c).expect("table code"));
            Support::from_pieces(pieces).expect("four pieces")
        })
        .collect();
    out.sort();
    out
}

/// One step of the normalisation trace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    /// The puzzle before this step's flip.
    pub before: Puzzle,
    /// The G or T that was found.
    pub piece: Piece,
    /// 1-based left column of the window.
    pub position: usize,
    pub flip: FlipSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalization {
    pub input: Puzzle,
    pub steps: Vec<Step>,
    pub output: Puzzle,
}

fn render_block(f: &mut fmt::Formatter<'_>, p: &Puzzle, w: usize, note: &str) -> fmt::Result {
    let row = |r: &[Label]| r.iter().map(|v| format!("{v:>w$}")).collect::<String>();
    let letters: String = p
        .pieces()
        .iter()
        .map(|q| format!("{:>w$}", q.code()))
        .collect();
    writeln!(f, "{}{note}", row(p.top()))?;
    writeln!(f, "{:half$}{letters}", "", half = w / 2)?;
    writeln!(f, "{}", row(p.bottom()))
}

/// Step-by-step layout: each puzzle with its pieces between the rows, then
/// the G/T found, its window and the flip set.
impl fmt::Display for Normalization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = (2 * self.input.width()).to_string().len() + 2;
        for s in &self.steps {
            let note = format!(
                "    {}  ({},{})  S={}",
                s.piece.code(),
                s.position,
                s.position + 1,
                s.flip
            );
            render_block(f, &s.before, w, &note)?;
            writeln!(f)?;
        }
        render_block(f, &self.output, w, "")
    }
}

fn family(codes: &str) -> Support {
    codes.parse().expect("literal support")
}

fn check_family(p: &Puzzle, allowed: Support, name: &'static str) -> Result<()> {
    for (i, piece) in p.pieces().into_iter().enumerate() {
        if !allowed.contains(piece) {
            return Err(Error::OutsideFamily {
                piece: piece.code(),
                position: i + 1,
                family: name,
            });
        }
    }
    Ok(())
}

/// Repeatedly flips the suffix after the leftmost G or T until none is left.
pub fn normalize_bgty_to_bjry(p: &Puzzle) -> Result<Normalization> {
    check_family(p, family("BGTY"), "BGTY")?;
    let targets = family("GT");
    let width = p.width();
    let mut current = p.clone();
    let mut steps = Vec::new();
    let mut last_position = 0;
    while let Some((i, piece)) = current
        .pieces()
        .into_iter()
        .enumerate()
        .find(|(_, q)| targets.contains(*q))
    {
        let position = i + 1;
        assert!(position > last_position, "leftmost G/T must move right");
        assert!(steps.len() < width, "at most n-1 flips");
        last_position = position;
        let set = FlipSet::range(position + 1, width);
        let next = flip(&current, &set)?;
        steps.push(Step {
            before: current,
            piece,
            position,
            flip: set,
        });
        current = next;
    }
    debug_assert!(check_family(&current, family("BJRY"), "BJRY").is_ok());
    Ok(Normalization {
        input: p.clone(),
        steps,
        output: current,
    })
}

/// Inverse of [`normalize_bgty_to_bjry`]. Suffix flips commute, and the J and
/// R windows of the image sit exactly where the forward pass flipped, so
/// flipping after each of them again restores the input.
pub fn denormalize_bjry_to_bgty(p: &Puzzle) -> Result<Puzzle> {
    check_family(p, family("BJRY"), "BJRY")?;
    let marks = family("JR");
    let width = p.width();
    let mut out = p.clone();
    for (i, piece) in p.pieces().into_iter().enumerate() {
        if marks.contains(piece) {
            out = flip(&out, &FlipSet::range(i + 2, width))?;
        }
    }
    Ok(out)
}
