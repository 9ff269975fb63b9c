//! Factorization of `x^n - 1` over F2.
//!
//! Write `n = m * 2^s` with `m` odd. Then `x^n - 1 = (x^m - 1)^(2^s)` and
//! `x^m - 1` is squarefree, so it splits into distinct irreducibles whose
//! degrees are the sizes of the 2-cyclotomic cosets modulo `m`. The same
//! factorization holds over `R` because the factors lie in the subring F2.
//!
//! The squarefree part is split by distinct-degree factorization followed by
//! the trace form of Cantor-Zassenhaus, driven by a fixed-seed generator so the
//! output is deterministic.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{PolyError, PolyF2};

/// Irreducible factor `g` of `x^m - 1`, appearing in `x^n - 1` with multiplicity `2^s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub poly: PolyF2,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub n: usize,
    /// 2-adic exponent of `n`.
    pub s: u32,
    /// Odd part of `n`.
    pub m: usize,
    /// Sorted by degree, then by coefficients.
    pub factors: Vec<Factor>,
}

impl Factorization {
    /// Multiplicity shared by every factor.
    pub fn multiplicity(&self) -> usize {
        1 << self.s
    }

    /// Product of every factor raised to its multiplicity.
    pub fn product(&self) -> PolyF2 {
        self.factors.iter().fold(PolyF2::one(), |acc, f| {
            &acc * &f.poly.pow(f.multiplicity as u64)
        })
    }

    /// Monic divisor `prod g_i^(e_i)` for an exponent vector with `e_i <= 2^s`.
    pub fn divisor(&self, exponents: &[usize]) -> PolyF2 {
        assert_eq!(
            exponents.len(),
            self.factors.len(),
            "one exponent per factor"
        );
        self.factors
            .iter()
            .zip(exponents)
            .fold(PolyF2::one(), |acc, (f, &e)| {
                assert!(e <= f.multiplicity, "exponent exceeds multiplicity");
                &acc * &f.poly.pow(e as u64)
            })
    }

    /// Exponent of each factor in a divisor of `x^n - 1`.
    pub fn exponents_of(&self, divisor: &PolyF2) -> Result<Vec<usize>, PolyError> {
        let mut rest = divisor.clone();
        let mut exps = Vec::with_capacity(self.factors.len());
        for f in &self.factors {
            let mut e = 0;
            loop {
                let (q, r) = rest.divmod(&f.poly)?;
                if !r.is_zero() || e == f.multiplicity {
                    break;
                }
                rest = q;
                e += 1;
            }
            exps.push(e);
        }
        if rest.is_one() {
            Ok(exps)
        } else {
            Err(PolyError::NotADivisor {
                poly: divisor.to_string(),
                n: self.n,
            })
        }
    }

    /// Number of monic divisors of `x^n - 1`.
    pub fn divisor_count(&self) -> u128 {
        (self.multiplicity() as u128 + 1).pow(self.factors.len() as u32)
    }
}

/// Factors `x^n - 1` over F2 (equivalently over `R`).
pub fn factor_xn_minus_1(n: usize) -> Result<Factorization, PolyError> {
    if n == 0 {
        return Err(PolyError::ZeroLength);
    }
    let s = n.trailing_zeros();
    let m = n >> s;
    let mut factors = squarefree_split(&PolyF2::x_pow_minus_one(m));
    factors.sort();
    Ok(Factorization {
        n,
        s,
        m,
        factors: factors
            .into_iter()
            .map(|poly| Factor {
                poly,
                multiplicity: 1 << s,
            })
            .collect(),
    })
}

/// Orbits of `{0, .., m-1}` under multiplication by 2, each listed in
/// doubling order from its smallest member.
pub fn cyclotomic_cosets(m: usize) -> Result<Vec<Vec<usize>>, PolyError> {
    if m == 0 || m.is_multiple_of(2) {
        return Err(PolyError::EvenModulus(m));
    }
    let mut seen = vec![false; m];
    let mut cosets = Vec::new();
    for start in 0..m {
        if seen[start] {
            continue;
        }
        let mut coset = Vec::new();
        let mut r = start;
        while !seen[r] {
            seen[r] = true;
            coset.push(r);
            r = (2 * r) % m;
        }
        cosets.push(coset);
    }
    Ok(cosets)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NegacyclicCheck {
    pub holds: bool,
    /// Smallest `i >= 1` with `2^i = -1 (mod m)`.
    pub witness: Option<u32>,
}

/// Tests whether some power of 2 is congruent to `-1` modulo odd `m`.
pub fn negacyclic_condition(m: usize) -> Result<NegacyclicCheck, PolyError> {
    if m == 0 || m.is_multiple_of(2) {
        return Err(PolyError::EvenModulus(m));
    }
    let target = (m - 1) % m;
    let mut r = 2 % m;
    // The powers of 2 cycle with period ord_m(2) <= m.
    for i in 1..=m as u32 {
        if r == target {
            return Ok(NegacyclicCheck {
                holds: true,
                witness: Some(i),
            });
        }
        r = (2 * r) % m;
    }
    Ok(NegacyclicCheck {
        holds: false,
        witness: None,
    })
}

/// Splits a squarefree polynomial with nonzero constant term into its irreducible factors.
fn squarefree_split(f: &PolyF2) -> Vec<PolyF2> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_c0de);
    let mut out = Vec::new();
    for (degree, part) in distinct_degree(f) {
        equal_degree(&part, degree, &mut rng, &mut out);
    }
    out
}

/// Groups the irreducible factors of a squarefree `f` by degree.
fn distinct_degree(f: &PolyF2) -> Vec<(usize, PolyF2)> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = PolyF2::monomial(1);
    // h = x^(2^d) mod rest
    let mut h = x.rem(&rest).expect("nonzero");
    let mut d = 0;
    while let Some(deg) = rest.degree() {
        if deg == 0 {
            break;
        }
        d += 1;
        if 2 * d > deg {
            out.push((deg, rest.clone()));
            break;
        }
        h = h.square().rem(&rest).expect("nonzero");
        let g = rest.gcd(&(&h + &x));
        if !g.is_one() {
            out.push((d, g.clone()));
            rest = rest.divmod(&g).expect("nonzero").0;
            h = h.rem(&rest).expect("nonzero");
        }
    }
    out
}

/// Splits a product of distinct irreducibles of equal degree `d`.
fn equal_degree(f: &PolyF2, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<PolyF2>) {
    let deg = f.degree().expect("nonzero");
    if deg == d {
        out.push(f.clone());
        return;
    }
    loop {
        let a = PolyF2::from_coeffs((0..deg).map(|_| rng.gen::<bool>()));
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        // Absolute trace a + a^2 + ... + a^(2^(d-1)) mod f lands in F2 in each
        // residue field, so its gcd with f splits f with probability about 1/2.
        let mut term = a.clone();
        let mut trace = a;
        for _ in 1..d {
            term = term.square().rem(f).expect("nonzero");
            trace = &trace + &term;
        }
        let g = f.gcd(&trace);
        match g.degree() {
            Some(gd) if gd > 0 && gd < deg => {
                let q = f.divmod(&g).expect("nonzero").0;
                equal_degree(&g, d, rng, out);
                equal_degree(&q, d, rng, out);
                return;
            }
            _ => continue,
        }
    }
}
