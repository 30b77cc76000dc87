//! Identity suites tying puzzle counts to closed forms.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bijection::gamma_family;
use crate::count::{profile, sequence};
use crate::error::{Error, Result};
use crate::numbers::{binomial, catalan, named_reference, secant, theorem_rhs};
use crate::puzzle::Label;
use crate::support::Support;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    Theorem,
    Conjecture,
    Identity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "detail", rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    /// All pairs agree, but with a law different from the one printed.
    Deviation(String),
    Fail(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub label: String,
    pub n: usize,
    pub expected: String,
    pub actual: String,
}

impl Row {
    fn new(label: impl Into<String>, n: usize, expected: &BigUint, actual: &BigUint) -> Row {
        Row {
            label: label.into(),
            n,
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }

    pub fn agrees(&self) -> bool {
        self.expected == self.actual
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub kind: CheckKind,
    pub rows: Vec<Row>,
    pub verdict: Verdict,
}

impl VerificationReport {
    fn from_rows(check: &str, kind: CheckKind, rows: Vec<Row>) -> VerificationReport {
        let bad: Vec<String> = rows
            .iter()
            .filter(|r| !r.agrees())
            .map(|r| format!("{} n={}", r.label, r.n))
            .collect();
        let verdict = if bad.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Fail(format!("mismatch at {}", bad.join(", ")))
        };
        VerificationReport {
            check: check.to_string(),
            kind,
            rows,
            verdict,
        }
    }

    /// Pass or deviation.
    pub fn passed(&self) -> bool {
        !matches!(self.verdict, Verdict::Fail(_))
    }

    pub fn is_strict_pass(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn status_word(&self) -> &'static str {
        match (&self.verdict, self.kind) {
            (Verdict::Fail(_), _) => "FAIL",
            (Verdict::Deviation(_), _) => "DEVIATION",
            (Verdict::Pass, CheckKind::Conjecture) => "conjecture-consistent",
            (Verdict::Pass, _) => "pass",
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "[{}] {} ({:?})",
            self.status_word(),
            self.check,
            self.kind
        )?;
        for r in &self.rows {
            let mark = if r.agrees() { "ok " } else { "BAD" };
            writeln!(
                f,
                "  {mark} {:<12} n={:<3} expected={} actual={}",
                r.label, r.n, r.expected, r.actual
            )?;
        }
        match &self.verdict {
            Verdict::Deviation(d) | Verdict::Fail(d) => writeln!(f, "  note: {d}"),
            Verdict::Pass => Ok(()),
        }
    }
}

fn lit(s: &str) -> Support {
    s.parse().expect("literal support")
}

fn counts(support: Support, n_max: usize) -> Result<Vec<BigUint>> {
    Ok(sequence(support, 2, n_max.max(2))?.terms)
}

fn check_n_max(n_max: usize) -> Result<()> {
    if n_max < 2 {
        return Err(Error::WidthTooSmall {
            width: n_max,
            min: 2,
        });
    }
    Ok(())
}

/// `|BC^n| = |BD^n| = C_n`.
pub fn verify_catalan(n_max: usize) -> Result<VerificationReport> {
    check_n_max(n_max)?;
    let mut rows = Vec::new();
    for name in ["BC", "BD"] {
        for (i, actual) in counts(lit(name), n_max)?.iter().enumerate() {
            let n = i + 2;
            rows.push(Row::new(name, n, &catalan(n as u64), actual));
        }
    }
    Ok(VerificationReport::from_rows(
        "catalan",
        CheckKind::Theorem,
        rows,
    ))
}

pub const TANGENT_SUPPORTS: [&str; 7] = ["BEGJ", "BEGY", "BEJV", "BEVY", "BJTV", "EJRV", "BGTY"];

/// The six tangent identities plus BGTY, the 16-member product family, and
/// `|BGTY^n| = 2 |BG^n|`.
pub fn verify_tangent(n_max: usize) -> Result<VerificationReport> {
    check_n_max(n_max)?;
    let rhs: Vec<BigUint> = (2..=n_max as u64).map(theorem_rhs).collect::<Result<_>>()?;
    let mut rows = Vec::new();
    for name in TANGENT_SUPPORTS {
        for (i, actual) in counts(lit(name), n_max)?.iter().enumerate() {
            rows.push(Row::new(name, i + 2, &rhs[i], actual));
        }
    }
    let bgty = counts(lit("BGTY"), n_max)?;
    for member in gamma_family() {
        for (i, actual) in counts(member, n_max)?.iter().enumerate() {
            rows.push(Row::new(format!("gamma:{member}"), i + 2, &bgty[i], actual));
        }
    }
    for (i, bg) in counts(lit("BG"), n_max)?.iter().enumerate() {
        rows.push(Row::new("2*BG", i + 2, &bgty[i], &(bg << 1)));
    }
    Ok(VerificationReport::from_rows(
        "tangent",
        CheckKind::Theorem,
        rows,
    ))
}

/// `|BCEG^n| = n T_{2n-1} / 2^{n-2}`, reported as a conjecture.
pub fn verify_bceg_conjecture(n_max: usize) -> Result<VerificationReport> {
    check_n_max(n_max)?;
    let mut rows = Vec::new();
    for (i, actual) in counts(lit("BCEG"), n_max)?.iter().enumerate() {
        let n = i + 2;
        rows.push(Row::new("BCEG", n, &theorem_rhs(n as u64)?, actual));
    }
    Ok(VerificationReport::from_rows(
        "bceg",
        CheckKind::Conjecture,
        rows,
    ))
}

/// `Q_n(X, Y) = sum_{k=X}^{Y-1} binomial(2n, k)` for `X < Y`, zero for `X > Y`.
pub fn q_weight(n: usize, top: Label, bottom: Label) -> Result<BigUint> {
    let m = 2 * n;
    if top == bottom || top == 0 || bottom == 0 || top as usize > m || bottom as usize > m {
        return Err(Error::BoundaryLabels {
            top,
            bottom,
            max: m,
        });
    }
    Ok((top..bottom).map(|k| binomial(m as u64, k as u64)).sum())
}

/// `W(n) = sum over (X, Y) of |BJTV^n[X/Y]| Q_n(X, Y)`.
pub fn secant_weighted_sum(n: usize) -> Result<BigUint> {
    let prof = profile(lit("BJTV"), n)?;
    let mut acc = BigUint::zero();
    for (x, y, c) in prof.nonzero() {
        acc += c * q_weight(n, x, y)?;
    }
    Ok(acc)
}

/// `Some(e)` when `num / den == 2^e` exactly (e may be negative).
fn power_of_two_ratio(num: &BigUint, den: &BigUint) -> Option<i64> {
    if num.is_zero() || den.is_zero() {
        return None;
    }
    let g = num.gcd(den);
    let (a, b) = (num / &g, den / &g);
    let is_pow2 = |v: &BigUint| v.count_ones() == 1;
    match (a.is_one(), b.is_one()) {
        (true, true) => Some(0),
        (false, true) if is_pow2(&a) => Some(a.bits() as i64 - 1),
        (true, false) if is_pow2(&b) => Some(-(b.bits() as i64 - 1)),
        _ => None,
    }
}

/// An exponent law `2^{slope * n + intercept}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerLaw {
    pub slope: i64,
    pub intercept: i64,
}

impl PowerLaw {
    pub fn exponent(&self, n: usize) -> i64 {
        self.slope * n as i64 + self.intercept
    }
}

impl fmt::Display for PowerLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n_part = match self.slope {
            0 => String::new(),
            1 => "n".to_string(),
            -1 => "-n".to_string(),
            s => format!("{s}n"),
        };
        match (n_part.is_empty(), self.intercept) {
            (true, c) => write!(f, "2^{c}"),
            (false, 0) => write!(f, "2^({n_part})"),
            (false, c) => write!(f, "2^({n_part}{c:+})"),
        }
    }
}

/// The normalisation as printed: `W(n) = 2^{-n} E_{2n}`.
pub const PRINTED_SECANT_LAW: PowerLaw = PowerLaw {
    slope: -1,
    intercept: 0,
};

/// Exponents of `W(n) / E_{2n}` for `n = 2..=n_max`, `None` where the ratio
/// is not a power of two.
pub fn secant_exponents(n_max: usize) -> Result<Vec<Option<i64>>> {
    check_n_max(n_max)?;
    (2..=n_max)
        .map(|n| {
            Ok(power_of_two_ratio(
                &secant_weighted_sum(n)?,
                &secant(n as u64),
            ))
        })
        .collect()
}

/// Fits one affine exponent law to every ratio; `None` if no single law fits.
pub fn fit_secant_law(exponents: &[Option<i64>]) -> Option<PowerLaw> {
    let exps: Vec<i64> = exponents.iter().copied().collect::<Option<_>>()?;
    let law = match exps.as_slice() {
        [] => return None,
        [e] => PowerLaw {
            slope: 0,
            intercept: *e,
        },
        [e0, e1, ..] => PowerLaw {
            slope: e1 - e0,
            intercept: e0 - 2 * (e1 - e0),
        },
    };
    exps.iter()
        .enumerate()
        .all(|(i, &e)| law.exponent(i + 2) == e)
        .then_some(law)
}

/// Weighted BJTV profile sums against secant numbers. The normalising
/// power of two is fitted from the data and compared with the printed one.
pub fn verify_secant_identity(n_max: usize) -> Result<VerificationReport> {
    check_n_max(n_max)?;
    let exponents = secant_exponents(n_max)?;
    let law = fit_secant_law(&exponents);
    let mut rows = Vec::new();
    for n in 2..=n_max {
        let w = secant_weighted_sum(n)?;
        let e = secant(n as u64);
        let expected = match law {
            Some(l) if l.exponent(n) >= 0 => e << l.exponent(n) as usize,
            Some(l) => e >> (-l.exponent(n)) as usize,
            None => e,
        };
        rows.push(Row::new("W(n)", n, &expected, &w));
    }
    let mut report = VerificationReport::from_rows("secant", CheckKind::Identity, rows);
    report.verdict = match law {
        None => Verdict::Fail(format!(
            "W(n)/E_2n is not a single power-of-two law: exponents {exponents:?}"
        )),
        Some(l) if l == PRINTED_SECANT_LAW => Verdict::Pass,
        Some(l) => Verdict::Deviation(format!(
            "W(n) = {l} * E_2n for 2 <= n <= {n_max}; printed normalisation is {PRINTED_SECANT_LAW}"
        )),
    };
    Ok(report)
}

/// How a named support's terms relate to a registry sequence:
/// `seq(n) = scale_num * reference(n) / scale_den + shift`.
#[derive(Clone, Copy, Debug)]
pub struct NamedCheck {
    pub support: &'static str,
    pub reference: &'static str,
    pub scale_num: u64,
    pub scale_den: u64,
    pub shift: u64,
}

const fn named(support: &'static str, reference: &'static str) -> NamedCheck {
    NamedCheck {
        support,
        reference,
        scale_num: 1,
        scale_den: 1,
        shift: 0,
    }
}

pub const NAMED_CHECKS: &[NamedCheck] = &[
    named("ACX", "fibonacci"),
    named("AB", "double_factorial_even"),
    named("ABD", "odd_double_factorial"),
    NamedCheck {
        scale_num: 4,
        scale_den: 3,
        ..named("ABCD", "odd_double_factorial")
    },
    NamedCheck {
        shift: 1,
        ..named("ACMT", "little_schroeder")
    },
    named("CDW", "koch_angles"),
    NamedCheck {
        shift: 2,
        ..named("AES", "central_binomial_adjacent")
    },
    named("BF", "catalan_adjacent_sum"),
    named("BL", "twice_central_binomial"),
    named("BC", "catalan"),
    named("BD", "catalan"),
    named("BCEG", "tangent_rhs"),
];

impl NamedCheck {
    pub fn expected(&self, n: usize) -> Result<BigUint> {
        let r = named_reference(self.reference)?.term(n as u64) * self.scale_num;
        let (q, rem) = r.div_rem(&BigUint::from(self.scale_den));
        if !rem.is_zero() {
            return Err(Error::InexactDivision {
                divisor: self.scale_den.to_string(),
            });
        }
        Ok(q + self.shift)
    }
}

pub fn verify_named_supports(n_max: usize) -> Result<VerificationReport> {
    check_n_max(n_max)?;
    let mut rows = Vec::new();
    for check in NAMED_CHECKS {
        for (i, actual) in counts(lit(check.support), n_max)?.iter().enumerate() {
            let n = i + 2;
            let label = format!("{}~{}", check.support, check.reference);
            rows.push(Row::new(label, n, &check.expected(n)?, actual));
        }
    }
    Ok(VerificationReport::from_rows(
        "named",
        CheckKind::Identity,
        rows,
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatioRow {
    pub n: usize,
    pub term: String,
    pub secant: String,
    /// `term / E_2n` rounded half-up to three decimals.
    pub ratio: String,
}

pub const SECANT_RATIO_SUPPORT: &str = "CEHJLPRVX";

/// `num / den` rounded half-up to three decimals, in exact arithmetic.
pub fn ratio_3dp(num: &BigUint, den: &BigUint) -> String {
    let scaled = (num * 2000u32 + den) / (den * 2u32);
    let (int, frac) = scaled.div_rem(&BigUint::from(1000u32));
    format!("{int}.{frac:0>3}")
}

pub fn secant_ratio_table(n_max: usize) -> Result<Vec<RatioRow>> {
    check_n_max(n_max)?;
    Ok(counts(lit(SECANT_RATIO_SUPPORT), n_max)?
        .into_iter()
        .enumerate()
        .map(|(i, term)| {
            let n = i + 2;
            let e = secant(n as u64);
            RatioRow {
                n,
                ratio: ratio_3dp(&term, &e),
                term: term.to_string(),
                secant: e.to_string(),
            }
        })
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Catalan,
    Tangent,
    Bceg,
    Secant,
    Named,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Ok(match s {
            "catalan" => Suite::Catalan,
            "tangent" => Suite::Tangent,
            "bceg" => Suite::Bceg,
            "secant" => Suite::Secant,
            "named" => Suite::Named,
            "all" => Suite::All,
            other => return Err(Error::UnknownSuite(other.to_string())),
        })
    }
}

pub fn run_suite(suite: Suite, n_max: usize) -> Result<Vec<VerificationReport>> {
    Ok(match suite {
        Suite::Catalan => vec![verify_catalan(n_max)?],
        Suite::Tangent => vec![verify_tangent(n_max)?],
        Suite::Bceg => vec![verify_bceg_conjecture(n_max)?],
        Suite::Secant => vec![verify_secant_identity(n_max)?],
        Suite::Named => vec![verify_named_supports(n_max)?],
        Suite::All => vec![
            verify_catalan(n_max)?,
            verify_tangent(n_max)?,
            verify_bceg_conjecture(n_max)?,
            verify_secant_identity(n_max)?,
            verify_named_supports(n_max)?,
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn q_weights() {
        assert_eq!(q_weight(2, 1, 3).unwrap(), n(10));
        assert_eq!(q_weight(2, 4, 2).unwrap(), n(0));
        assert_eq!(q_weight(3, 1, 2).unwrap(), n(6));
        assert!(q_weight(2, 2, 2).is_err());
        for w in 2..=5usize {
            let m = 2 * w as Label;
            for x in 1..=m {
                for y in 1..=m {
                    if x == y {
                        continue;
                    }
                    let (lo, hi) = (x.min(y), x.max(y));
                    let span: BigUint = (lo..hi).map(|k| binomial(m as u64, k as u64)).sum();
                    assert_eq!(
                        q_weight(w, x, y).unwrap() + q_weight(w, y, x).unwrap(),
                        span
                    );
                }
            }
        }
    }

    #[test]
    fn weighted_sum_small_cases() {
        // Four single-piece BJTV puzzles: (4,2), (1,3), (2,4), (3,1).
        let prof = profile(lit("BJTV"), 2).unwrap();
        let cells: Vec<(Label, Label)> = prof.nonzero().map(|(x, y, _)| (x, y)).collect();
        assert_eq!(cells, vec![(1, 3), (2, 4), (3, 1), (4, 2)]);
        assert_eq!(secant_weighted_sum(2).unwrap(), n(20));
    }

    #[test]
    fn power_of_two_detection() {
        assert_eq!(power_of_two_ratio(&n(20), &n(5)), Some(2));
        assert_eq!(power_of_two_ratio(&n(5), &n(20)), Some(-2));
        assert_eq!(power_of_two_ratio(&n(7), &n(7)), Some(0));
        assert_eq!(power_of_two_ratio(&n(21), &n(5)), None);
        assert_eq!(
            fit_secant_law(&[Some(2), Some(3), Some(4)]),
            Some(PowerLaw {
                slope: 1,
                intercept: 0
            })
        );
        assert_eq!(fit_secant_law(&[Some(2), Some(3), Some(5)]), None);
        assert_eq!(fit_secant_law(&[Some(2), None]), None);
        assert_eq!(
            PowerLaw {
                slope: 1,
                intercept: 0
            }
            .to_string(),
            "2^(n)"
        );
        assert_eq!(PRINTED_SECANT_LAW.to_string(), "2^(-n)");
    }

    #[test]
    fn rounding() {
        assert_eq!(ratio_3dp(&n(9), &n(5)), "1.800");
        assert_eq!(ratio_3dp(&n(111), &n(61)), "1.820");
        assert_eq!(ratio_3dp(&n(2505), &n(1385)), "1.809");
        assert_eq!(ratio_3dp(&n(1), &n(8)), "0.125");
        assert_eq!(ratio_3dp(&n(1), &n(2000)), "0.001");
    }

    #[test]
    fn suites_small() {
        for report in run_suite(Suite::All, 5).unwrap() {
            assert!(report.passed(), "{report}");
        }
        assert!("bogus".parse::<Suite>().is_err());
        assert!(verify_catalan(1).is_err());
    }
}
