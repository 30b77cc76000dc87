//! Exact reference sequences: Catalan, tangent, secant, Genocchi and the
//! handful of classical sequences the dictionary aligns against.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Euler zigzag numbers `A_0 ..= A_max` from the Seidel-Entringer
/// boustrophedon. Odd indices are tangent numbers, even ones secant numbers.
pub fn zigzag(max: usize) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(max + 1);
    let mut row = vec![BigUint::one()];
    out.push(BigUint::one());
    for k in 1..=max {
        // Entringer: E(k, 0) = 0, E(k, j) = E(k, j-1) + E(k-1, k-j).
        let mut next = Vec::with_capacity(k + 1);
        next.push(BigUint::zero());
        for j in 1..=k {
            let v = &next[j - 1] + &row[k - j];
            next.push(v);
        }
        out.push(next[k].clone());
        row = next;
    }
    out
}

/// Memoised zigzag table.
#[derive(Clone, Debug, Default)]
pub struct Zigzag {
    table: Vec<BigUint>,
}

impl Zigzag {
    pub fn get(&mut self, index: usize) -> &BigUint {
        if index >= self.table.len() {
            self.table = zigzag(index.max(2 * self.table.len()));
        }
        &self.table[index]
    }
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

pub fn catalan(n: u64) -> BigUint {
    binomial(2 * n, n) / (n + 1)
}

/// `T_{2n-1}`, `n >= 1`.
pub fn tangent(n: u64) -> BigUint {
    assert!(n >= 1, "tangent numbers are indexed from n = 1");
    zigzag(2 * n as usize - 1).pop().expect("nonempty")
}

/// `E_{2n}`.
pub fn secant(n: u64) -> BigUint {
    zigzag(2 * n as usize).pop().expect("nonempty")
}

fn exact_div(num: BigUint, den: BigUint) -> Result<BigUint> {
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::InexactDivision {
            divisor: den.to_string(),
        });
    }
    Ok(q)
}

/// Unsigned Genocchi number `G_{2n} = n T_{2n-1} / 2^{2n-2}`, `n >= 1`.
pub fn genocchi(n: u64) -> Result<BigUint> {
    exact_div(n * tangent(n), BigUint::one() << (2 * n - 2))
}

/// `n T_{2n-1} / 2^{n-2}`, `n >= 2`.
pub fn theorem_rhs(n: u64) -> Result<BigUint> {
    assert!(n >= 2, "defined from n = 2");
    exact_div(n * tangent(n), BigUint::one() << (n - 2))
}

pub fn fibonacci(n: u64) -> BigUint {
    let (mut a, mut b) = (BigUint::zero(), BigUint::one());
    for _ in 0..n {
        let c = &a + &b;
        a = b;
        b = c;
    }
    a
}

/// `(2n)!! = 2^n n!`.
pub fn double_factorial_even(n: u64) -> BigUint {
    factorial(n) << n
}

/// `(2n-1)!! = 1 * 3 * ... * (2n-1)`.
pub fn odd_double_factorial(n: u64) -> BigUint {
    (1..=n).map(|k| BigUint::from(2 * k - 1)).product()
}

/// Little Schroeder (super-Catalan) numbers 1, 1, 3, 11, 45, 197, ...
pub fn little_schroeder(n: u64) -> BigUint {
    if n <= 1 {
        return BigUint::one();
    }
    // Large Schroeder numbers r_k are twice the little ones for k >= 1:
    // r_k = r_{k-1} + sum_{i<k} r_i r_{k-1-i}.
    let mut large = vec![BigUint::one()];
    for k in 1..=n as usize {
        let mut v = large[k - 1].clone();
        for i in 0..k {
            v += &large[i] * &large[k - 1 - i];
        }
        large.push(v);
    }
    &large[n as usize] >> 1
}

/// `binomial(2n, n-1)`, the entry next to the central one.
pub fn central_binomial_adjacent(n: u64) -> BigUint {
    if n == 0 {
        return BigUint::zero();
    }
    binomial(2 * n, n - 1)
}

/// A classical sequence plus the shift that aligns it with puzzle widths:
/// `term(n) = generator(n + offset)`.
#[derive(Clone, Copy)]
pub struct ReferenceSequence {
    pub name: &'static str,
    pub description: &'static str,
    pub offset: i64,
    generator: fn(u64) -> BigUint,
}

impl ReferenceSequence {
    pub fn term(&self, n: u64) -> BigUint {
        let k = n as i64 + self.offset;
        assert!(k >= 0, "{} undefined at n = {n}", self.name);
        (self.generator)(k as u64)
    }

    pub fn terms(&self, n_min: u64, n_max: u64) -> Vec<BigUint> {
        (n_min..=n_max).map(|n| self.term(n)).collect()
    }
}

impl std::fmt::Debug for ReferenceSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ReferenceSequence")
            .field("name", &self.name)
            .field("offset", &self.offset)
            .finish()
    }
}

fn tangent_rhs_gen(n: u64) -> BigUint {
    theorem_rhs(n).expect("n T_{2n-1} is divisible by 2^{n-2}")
}

fn genocchi_gen(n: u64) -> BigUint {
    genocchi(n).expect("Genocchi division is exact")
}

fn koch_angles(k: u64) -> BigUint {
    (BigUint::one() << (2 * k)) + 2u8
}

fn catalan_adjacent_sum(k: u64) -> BigUint {
    catalan(k) + catalan(k + 1)
}

fn twice_central_binomial(k: u64) -> BigUint {
    binomial(2 * k, k) << 1
}

const REGISTRY: &[ReferenceSequence] = &[
    ReferenceSequence {
        name: "catalan",
        description: "Catalan numbers C_n",
        offset: 0,
        generator: catalan,
    },
    ReferenceSequence {
        name: "fibonacci",
        description: "Fibonacci numbers F_{n+2}",
        offset: 2,
        generator: fibonacci,
    },
    ReferenceSequence {
        name: "double_factorial_even",
        description: "(2k)!! = 2^k k! with k = n-1",
        offset: -1,
        generator: double_factorial_even,
    },
    ReferenceSequence {
        name: "odd_double_factorial",
        description: "(2n-1)!!",
        offset: 0,
        generator: odd_double_factorial,
    },
    ReferenceSequence {
        name: "little_schroeder",
        description: "little Schroeder numbers s_n",
        offset: 0,
        generator: little_schroeder,
    },
    ReferenceSequence {
        name: "central_binomial_adjacent",
        description: "binomial(2k, k-1) with k = n-1",
        offset: -1,
        generator: central_binomial_adjacent,
    },
    ReferenceSequence {
        name: "catalan_adjacent_sum",
        description: "C_{n-2} + C_{n-1}",
        offset: -2,
        generator: catalan_adjacent_sum,
    },
    ReferenceSequence {
        name: "twice_central_binomial",
        description: "2 binomial(2k, k) with k = n-2",
        offset: -2,
        generator: twice_central_binomial,
    },
    ReferenceSequence {
        name: "koch_angles",
        description: "4^{n-2} + 2",
        offset: -2,
        generator: koch_angles,
    },
    ReferenceSequence {
        name: "tangent_rhs",
        description: "n T_{2n-1} / 2^{n-2}",
        offset: 0,
        generator: tangent_rhs_gen,
    },
    ReferenceSequence {
        name: "genocchi",
        description: "unsigned Genocchi numbers G_{2n}",
        offset: 0,
        generator: genocchi_gen,
    },
    ReferenceSequence {
        name: "secant",
        description: "secant numbers E_{2n}",
        offset: 0,
        generator: secant,
    },
];

pub fn named_reference(name: &str) -> Result<ReferenceSequence> {
    REGISTRY
        .iter()
        .find(|r| r.name == name)
        .copied()
        .ok_or_else(|| Error::UnknownReference(name.to_string()))
}

pub fn reference_names() -> impl Iterator<Item = &'static str> {
    REGISTRY.iter().map(|r| r.name)
}
