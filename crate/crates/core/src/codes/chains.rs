use std::collections::HashSet;

use crate::polys::{factor_xn_minus_1, Factorization, PolyError, PolyF2};

use super::cyclic::CyclicCodeR;
use super::span::Span;

/// Weakly decreasing exponent tuples `(e0, e1, e2, e3)` with `e0 <= max`:
/// the exponent of one irreducible factor in `f0, f1, f2, f3`.
fn monotone_tuples(max: usize) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for e3 in 0..=max {
        for e2 in e3..=max {
            for e1 in e2..=max {
                for e0 in e1..=max {
                    out.push([e0, e1, e2, e3]);
                }
            }
        }
    }
    out
}

/// Streams every divisor chain `f3 | f2 | f1 | f0 | x^n - 1` as a code.
pub struct Chains {
    n: usize,
    factorization: Factorization,
    tuples: Vec<[usize; 4]>,
    /// Odometer over per-factor tuple indices; `None` once exhausted.
    state: Option<Vec<usize>>,
}

impl Chains {
    pub fn factorization(&self) -> &Factorization {
        &self.factorization
    }

    /// Total number of chains, `C(2^s + 4, 4)^l`.
    pub fn total(&self) -> u128 {
        (self.tuples.len() as u128).pow(self.factorization.factors.len() as u32)
    }

    fn current_chain(&self, idx: &[usize]) -> [PolyF2; 4] {
        [0, 1, 2, 3].map(|t| {
            let exps: Vec<usize> = idx.iter().map(|&i| self.tuples[i][t]).collect();
            self.factorization.divisor(&exps)
        })
    }
}

impl Iterator for Chains {
    type Item = CyclicCodeR;

    fn next(&mut self) -> Option<CyclicCodeR> {
        let idx = self.state.as_mut()?;
        let snapshot = idx.clone();
        // advance, last factor fastest
        let mut k = idx.len();
        loop {
            if k == 0 {
                self.state = None;
                break;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < self.tuples.len() {
                break;
            }
            idx[k] = 0;
        }
        let chain = self.current_chain(&snapshot);
        Some(CyclicCodeR::new_unchecked(self.n, chain))
    }
}

/// All chain codes of length `n`, in a fixed order.
pub fn enumerate_chains(n: usize) -> Result<Chains, PolyError> {
    let factorization = factor_xn_minus_1(n)?;
    let tuples = monotone_tuples(factorization.multiplicity());
    let state = Some(vec![0; factorization.factors.len()]);
    Ok(Chains {
        n,
        factorization,
        tuples,
        state,
    })
}

/// Chain codes with duplicate codeword sets removed; the first chain in
/// enumeration order represents each code.
pub fn enumerate_distinct_codes(n: usize) -> Result<impl Iterator<Item = CyclicCodeR>, PolyError> {
    let mut seen: HashSet<Span> = HashSet::new();
    Ok(enumerate_chains(n)?.filter(move |c| seen.insert(c.span().clone())))
}

#[cfg(test)]
mod tests {
    use super::*;

    // Count of weakly monotone 4-tuples over {0..=k}, by direct enumeration.
    fn brute_monotone(k: usize) -> usize {
        let mut count = 0;
        for a in 0..=k {
            for b in 0..=k {
                for c in 0..=k {
                    for d in 0..=k {
                        if a >= b && b >= c && c >= d {
                            count += 1;
                        }
                    }
                }
            }
        }
        count
    }

    #[test]
    fn chain_counts() {
        assert_eq!(monotone_tuples(1).len(), brute_monotone(1));
        assert_eq!(monotone_tuples(2).len(), brute_monotone(2));
        assert_eq!(monotone_tuples(4).len(), brute_monotone(4));
        assert_eq!(enumerate_chains(1).unwrap().count(), 5);
        assert_eq!(enumerate_chains(2).unwrap().count(), 15);
        assert_eq!(enumerate_chains(3).unwrap().count(), 25);
        assert_eq!(enumerate_chains(6).unwrap().count(), 225);
        assert_eq!(enumerate_chains(6).unwrap().total(), 225);
        assert_eq!(enumerate_chains(4).unwrap().total(), 70);
    }

    #[test]
    fn chains_are_valid() {
        for n in [1, 2, 3, 4, 6] {
            for code in enumerate_chains(n).unwrap() {
                let [f0, f1, f2, f3] = code.chain().clone();
                assert!(CyclicCodeR::new(n, [f0, f1, f2, f3]).is_ok());
            }
        }
    }

    #[test]
    fn n1_gives_the_ideal_chain_of_r() {
        let mut sizes: Vec<usize> = enumerate_distinct_codes(1)
            .unwrap()
            .map(|c| c.log2_size())
            .collect();
        sizes.sort();
        assert_eq!(sizes, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn odd_length_chains_are_distinct() {
        assert_eq!(enumerate_distinct_codes(3).unwrap().count(), 25);
    }
}
