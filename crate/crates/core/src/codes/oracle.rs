//! Brute-force ideal enumeration for tiny lengths, used to cross-check the
//! divisor-chain description of cyclic codes. Works on explicit codeword sets
//! (no row reduction): words are packed into a `u64` with coordinate `j` in
//! bits `4j..4j+4`, which limits it to `n <= 16`.

use std::collections::BTreeSet;

use super::CodeError;

/// Default bound on `16^n`, allowing `n <= 3`.
pub const DEFAULT_ORACLE_CAP: u64 = 1 << 12;

fn shift(w: u64, n: usize) -> u64 {
    let bits = 4 * n;
    let mask = if bits == 64 {
        u64::MAX
    } else {
        (1u64 << bits) - 1
    };
    ((w << 4) | (w >> (bits - 4))) & mask
}

fn mul_u(w: u64) -> u64 {
    // rotate every nibble left by one
    let lo = w & 0x7777_7777_7777_7777;
    let hi = w & 0x8888_8888_8888_8888;
    (lo << 1) | (hi >> 3)
}

/// Closure of a seed set under addition, cyclic shift, and multiplication by `u`.
struct Closure {
    member: Vec<bool>,
    elements: Vec<u64>,
}

impl Closure {
    fn new(n: usize) -> Self {
        let mut member = vec![false; 1usize << (4 * n)];
        member[0] = true;
        Self {
            member,
            elements: vec![0],
        }
    }

    /// Adds `g` and all its sums with current elements (the set stays additively closed).
    fn add_generator(&mut self, g: u64) {
        if self.member[g as usize] {
            return;
        }
        let len = self.elements.len();
        for i in 0..len {
            let v = self.elements[i] ^ g;
            self.member[v as usize] = true;
            self.elements.push(v);
        }
    }

    fn close(mut self, n: usize, seeds: &[u64]) -> Vec<u64> {
        for &s in seeds {
            self.add_generator(s);
        }
        let mut i = 0;
        while i < self.elements.len() {
            let e = self.elements[i];
            self.add_generator(shift(e, n));
            self.add_generator(mul_u(e));
            i += 1;
        }
        let mut out = self.elements;
        out.sort_unstable();
        out
    }
}

/// Every distinct ideal of `R[x]/(x^n - 1)` generated by one element or by a
/// pair of elements, as sorted codeword lists.
///
/// The ideal generated by `{a, b}` is the sum of the principal ideals of `a` and
/// `b`, so pairs are formed over one representative per distinct principal ideal.
pub fn brute_force_ideals(n: usize, cap: u64) -> Result<Vec<Vec<u64>>, CodeError> {
    if n == 0 {
        return Err(CodeError::ZeroLength);
    }
    let space = 16u64.checked_pow(n as u32).filter(|&s| s <= cap && n <= 16);
    let Some(space) = space else {
        return Err(CodeError::OracleCapExceeded { n, cap });
    };

    let mut principal: BTreeSet<Vec<u64>> = BTreeSet::new();
    let mut representatives: Vec<u64> = Vec::new();
    for a in 0..space {
        let ideal = Closure::new(n).close(n, &[a]);
        if principal.insert(ideal) {
            representatives.push(a);
        }
    }

    let mut all = principal;
    for (i, &a) in representatives.iter().enumerate() {
        for &b in &representatives[i + 1..] {
            all.insert(Closure::new(n).close(n, &[a, b]));
        }
    }
    Ok(all.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::RingWord;
    use crate::ring::RingElement;

    #[test]
    fn packed_ops_match_word_ops() {
        let w: RingWord = "1A3".parse().unwrap();
        let packed = w.pack()[0];
        assert_eq!(shift(packed, 3), w.shift().pack()[0]);
        assert_eq!(mul_u(packed), w.scale(RingElement::U).pack()[0]);
    }

    #[test]
    fn n1_has_five_ideals() {
        let ideals = brute_force_ideals(1, DEFAULT_ORACLE_CAP).unwrap();
        let sizes: Vec<usize> = ideals.iter().map(|i| i.len()).collect();
        assert_eq!(ideals.len(), 5);
        let mut sorted = sizes.clone();
        sorted.sort();
        assert_eq!(sorted, vec![1, 2, 4, 8, 16]);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            brute_force_ideals(4, DEFAULT_ORACLE_CAP),
            Err(CodeError::OracleCapExceeded { .. })
        ));
        assert!(brute_force_ideals(0, DEFAULT_ORACLE_CAP).is_err());
    }
}
