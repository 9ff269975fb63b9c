use std::fmt;

use serde::{Deserialize, Serialize};

use crate::polys::{PolyF2, PolyR};
use crate::ring::RingElement;

use super::span::{Elements, Span};
use super::word::RingWord;
use super::CodeError;

/// Default bound on the number of codewords enumerated.
pub const DEFAULT_CAP: u64 = 1 << 20;

/// Cyclic code of length `n` over `R`, the ideal
/// `<f0, (1+u) f1, (1+u)^2 f2, (1+u)^3 f3>` of `R[x]/(x^n - 1)` with
/// `f3 | f2 | f1 | f0 | x^n - 1` over F2. A layer set to `x^n - 1` contributes nothing.
#[derive(Clone, PartialEq, Eq)]
pub struct CyclicCodeR {
    n: usize,
    chain: [PolyF2; 4],
    span: Span,
}

impl CyclicCodeR {
    pub fn new(n: usize, chain: [PolyF2; 4]) -> Result<Self, CodeError> {
        if n == 0 {
            return Err(CodeError::ZeroLength);
        }
        let modulus = PolyF2::x_pow_minus_one(n);
        for (index, f) in chain.iter().enumerate() {
            if !f.divides(&modulus) {
                return Err(CodeError::NotADivisor {
                    index,
                    poly: f.to_string(),
                    n,
                });
            }
        }
        for t in 0..3 {
            if !chain[t + 1].divides(&chain[t]) {
                return Err(CodeError::ChainViolation {
                    inner: t + 1,
                    outer: t,
                    inner_poly: chain[t + 1].to_string(),
                    outer_poly: chain[t].to_string(),
                });
            }
        }
        Ok(Self::new_unchecked(n, chain))
    }

    /// Caller guarantees the chain condition.
    pub(crate) fn new_unchecked(n: usize, chain: [PolyF2; 4]) -> Self {
        let generators = layer_generators(n, &chain);
        let span = Span::ideal(n, generators.iter());
        Self { n, chain, span }
    }

    /// The principal code `<g>` for a polynomial over `R`, reduced mod `x^n - 1`.
    pub fn principal_span(n: usize, g: &PolyR) -> Span {
        Span::ideal(n, [&RingWord::from_poly(g, n)])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn chain(&self) -> &[PolyF2; 4] {
        &self.chain
    }

    pub fn span(&self) -> &Span {
        &self.span
    }

    pub fn log2_size(&self) -> usize {
        self.span.log2_size()
    }

    /// `sum_t (n - deg f_t)`, compared against the measured size in tests and reports.
    pub fn predicted_log2_size(&self) -> usize {
        self.chain
            .iter()
            .map(|f| self.n - f.degree().expect("nonzero divisor"))
            .sum()
    }

    pub fn is_zero_code(&self) -> bool {
        self.log2_size() == 0
    }

    pub fn contains(&self, w: &RingWord) -> Result<bool, CodeError> {
        self.span.contains(w)
    }

    pub fn codewords(&self, cap: u64) -> Result<Elements<'_>, CodeError> {
        self.span.elements(cap)
    }

    /// `(1+u+u^2+u^3) * (1 + x + .. + x^(n-1))`, the complement of the zero word.
    pub fn all_ones_word(&self) -> RingWord {
        RingWord::constant(self.n, RingElement::ALL_ONES)
    }

    /// Closed under `w -> w^rc`. Since `w^rc = reverse(w) + c` with `c` the
    /// all-ones word, this holds iff `c` is a codeword and the reversal of each
    /// basis vector is a codeword.
    pub fn is_reverse_complement(&self) -> bool {
        self.span.contains_packed(self.all_ones_word().pack())
            && self
                .span
                .basis()
                .all(|b| self.span.contains_packed(b.reverse().pack()))
    }

    pub fn self_reciprocal_flags(&self) -> [bool; 4] {
        [0, 1, 2, 3].map(|t| self.chain[t].is_self_reciprocal())
    }

    /// Every chain polynomial is self-reciprocal and the all-ones word is a codeword.
    pub fn rc_sufficient(&self) -> bool {
        self.self_reciprocal_flags().iter().all(|&b| b)
            && self.span.contains_packed(self.all_ones_word().pack())
    }

    /// Codewords that are multiples of `1 + u^2`, computed by intersecting the
    /// code with `(1+u^2) R[x]/(x^n - 1)`, plus the principal code
    /// `<(1+u^2) f3>` for comparison.
    pub fn subcode_1pu2(&self) -> SubcodeReport {
        let n = self.n;
        let multiples: Vec<RingWord> = (0..n)
            .flat_map(|j| {
                [
                    RingElement::ONE_PLUS_U2,
                    RingElement::ONE_PLUS_U2 * RingElement::U,
                ]
                .map(|c| {
                    let mut v = RingWord::zero(n).coords().to_vec();
                    v[j] = c;
                    RingWord::new(v)
                })
            })
            .collect();
        let ambient = Span::from_words(n, multiples.iter());
        let subcode = self.span.intersect(&ambient);
        let candidate = Self::principal_span(
            n,
            &PolyR::from(&self.chain[3]).scale(RingElement::ONE_PLUS_U2),
        );
        let agrees = subcode == candidate;
        SubcodeReport {
            subcode,
            candidate,
            agrees,
        }
    }

    pub fn descriptor(&self) -> CodeDescriptor {
        CodeDescriptor {
            n: self.n,
            f0: self.chain[0].to_bit_string(),
            f1: self.chain[1].to_bit_string(),
            f2: self.chain[2].to_bit_string(),
            f3: self.chain[3].to_bit_string(),
            log2_size: self.log2_size(),
            rc: self.is_reverse_complement(),
            self_reciprocal: self.self_reciprocal_flags(),
        }
    }

    /// Short identifier, e.g. `n6[1000001,1000001,1000001,111]`.
    pub fn id(&self) -> String {
        format!(
            "n{}[{}]",
            self.n,
            self.chain
                .iter()
                .map(|f| f.to_bit_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

fn layer_generators(n: usize, chain: &[PolyF2; 4]) -> Vec<RingWord> {
    let mut out = Vec::with_capacity(4);
    let mut layer = RingElement::ONE;
    for f in chain {
        let g = RingWord::from_poly_f2(f, n).scale(layer);
        if !g.is_zero() {
            out.push(g);
        }
        layer *= RingElement::ONE_PLUS_U;
    }
    out
}

impl fmt::Debug for CyclicCodeR {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CyclicCodeR")
            .field("n", &self.n)
            .field("chain", &self.chain)
            .field("log2_size", &self.log2_size())
            .finish()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubcodeReport {
    /// Codewords of the code that are multiples of `1 + u^2`.
    pub subcode: Span,
    /// The principal code `<(1+u^2) f3>`.
    pub candidate: Span,
    pub agrees: bool,
}

/// JSON form of a chain code. Field order is fixed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeDescriptor {
    pub n: usize,
    pub f0: String,
    pub f1: String,
    pub f2: String,
    pub f3: String,
    #[serde(default)]
    pub log2_size: usize,
    #[serde(default)]
    pub rc: bool,
    #[serde(default)]
    pub self_reciprocal: [bool; 4],
}

impl CodeDescriptor {
    /// Rebuilds and validates the code; derived fields are recomputed, not trusted.
    pub fn to_code(&self) -> Result<CyclicCodeR, crate::Error> {
        let chain = [&self.f0, &self.f1, &self.f2, &self.f3].map(|s| PolyF2::parse_bits(s));
        let [f0, f1, f2, f3] = chain;
        Ok(CyclicCodeR::new(self.n, [f0?, f1?, f2?, f3?])?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn p(s: &str) -> PolyF2 {
        s.parse().unwrap()
    }

    pub(crate) fn example_code() -> CyclicCodeR {
        let full = PolyF2::x_pow_minus_one(6);
        CyclicCodeR::new(6, [full.clone(), full.clone(), full, p("x^2+x+1")]).unwrap()
    }

    #[test]
    fn example_code_structure() {
        let c = example_code();
        assert_eq!(c.log2_size(), 4);
        assert_eq!(c.predicted_log2_size(), 4);
        let g = PolyR::from(&p("x^2+x+1")).scale(RingElement::ALL_ONES);
        assert_eq!(CyclicCodeR::principal_span(6, &g), *c.span());
        assert!(c.contains(&RingWord::from_poly(&g, 6)).unwrap());
        assert!(c.contains(&RingWord::zero(6)).unwrap());
        assert!(!c.contains(&"1,0,0,0,0,0".parse().unwrap()).unwrap());
        assert!(c.contains(&RingWord::zero(5)).is_err());
    }

    #[test]
    fn example_code_words_fixed_by_u() {
        let c = example_code();
        let words: Vec<_> = c.codewords(DEFAULT_CAP).unwrap().collect();
        assert_eq!(words.len(), 16);
        assert_eq!(words.iter().collect::<HashSet<_>>().len(), 16);
        for w in &words {
            assert_eq!(w.scale(RingElement::U), *w);
            assert!(w
                .coords()
                .iter()
                .all(|&x| x == RingElement::ZERO || x == RingElement::ALL_ONES));
        }
    }

    #[test]
    fn trivial_codes() {
        let full = CyclicCodeR::new(
            1,
            [PolyF2::one(), PolyF2::one(), PolyF2::one(), PolyF2::one()],
        )
        .unwrap();
        assert_eq!(full.codewords(DEFAULT_CAP).unwrap().count(), 16);
        assert!(full.is_reverse_complement());

        let m = PolyF2::x_pow_minus_one(2);
        let zero = CyclicCodeR::new(2, [m.clone(), m.clone(), m.clone(), m]).unwrap();
        assert!(zero.is_zero_code());
        assert_eq!(
            zero.codewords(DEFAULT_CAP).unwrap().collect::<Vec<_>>(),
            vec![RingWord::zero(2)]
        );
        assert!(!zero.is_reverse_complement());
        assert!(!zero.rc_sufficient());
        let sub = zero.subcode_1pu2();
        assert_eq!(sub.subcode.log2_size(), 0);
    }

    #[test]
    fn construction_errors() {
        let m = PolyF2::x_pow_minus_one(6);
        assert_eq!(
            CyclicCodeR::new(
                0,
                [PolyF2::one(), PolyF2::one(), PolyF2::one(), PolyF2::one()]
            )
            .unwrap_err(),
            CodeError::ZeroLength
        );
        let err =
            CyclicCodeR::new(6, [m.clone(), m.clone(), p("x^3+x+1"), PolyF2::one()]).unwrap_err();
        assert!(matches!(err, CodeError::NotADivisor { index: 2, .. }));
        let err = CyclicCodeR::new(6, [p("x+1"), p("x^2+x+1"), PolyF2::one(), PolyF2::one()])
            .unwrap_err();
        assert!(matches!(
            err,
            CodeError::ChainViolation {
                inner: 1,
                outer: 0,
                ..
            }
        ));
        assert!(CyclicCodeR::new(6, [PolyF2::zero(), m.clone(), m.clone(), m]).is_err());
    }

    #[test]
    fn reverse_complement_examples() {
        let c = example_code();
        assert!(c.is_reverse_complement());
        assert!(c.rc_sufficient());

        let m = PolyF2::x_pow_minus_one(7);
        let c7 = CyclicCodeR::new(7, [m.clone(), m.clone(), m, p("x^3+x+1")]).unwrap();
        assert!(!c7.rc_sufficient());
    }

    #[test]
    fn subcode_on_example_is_whole_code() {
        let c = example_code();
        let report = c.subcode_1pu2();
        assert_eq!(report.subcode, *c.span());
        assert!(!report.agrees);
        assert!(c.span().is_subspace_of(&report.candidate));
        assert!(report.candidate.log2_size() > c.log2_size());
    }

    #[test]
    fn descriptor_roundtrip() {
        let c = example_code();
        let d = c.descriptor();
        assert_eq!(d.f3, "111");
        assert_eq!(d.f0, "1000001");
        assert!(d.rc);
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(
            json,
            r#"{"n":6,"f0":"1000001","f1":"1000001","f2":"1000001","f3":"111","log2_size":4,"rc":true,"self_reciprocal":[true,true,true,true]}"#
        );
        let back: CodeDescriptor = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_code().unwrap(), c);
    }
}
