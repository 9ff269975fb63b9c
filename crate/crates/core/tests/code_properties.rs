//! Structural properties of divisor-chain codes, checked over every chain of
//! small lengths.

use std::collections::HashSet;

use cyclic_dna::codes::{enumerate_chains, DEFAULT_CAP};
use cyclic_dna::dna::phi_word;
use cyclic_dna::polys::{factor_xn_minus_1, negacyclic_condition};
use cyclic_dna::thermo::{analyze_code, analyze_span};
use cyclic_dna::{CyclicCodeR, PolyF2, PolyR, RingElement, RingWord, Span, WeightTable};

fn one_plus_u_pow(t: u32) -> RingElement {
    RingElement::ONE_PLUS_U.pow(t)
}

#[test]
fn chain_codes_are_ideals_up_to_length_8() {
    for n in 1..=8 {
        for code in enumerate_chains(n).unwrap() {
            let span = code.span();
            for b in span.basis() {
                assert!(
                    span.contains(&b.shift()).unwrap(),
                    "{} not shift-closed",
                    code.id()
                );
                assert!(
                    span.contains(&b.scale(RingElement::U)).unwrap(),
                    "{} not u-closed",
                    code.id()
                );
            }
        }
    }
}

#[test]
fn chain_counts() {
    for (n, count) in [
        (1, 5),
        (2, 15),
        (3, 25),
        (4, 70),
        (5, 25),
        (6, 225),
        (7, 125),
        (8, 495),
    ] {
        let chains = enumerate_chains(n).unwrap();
        assert_eq!(chains.total(), count, "n={n}");
        assert_eq!(chains.count() as u128, count, "n={n}");
    }
}

#[test]
fn size_law_at_odd_length() {
    for n in [1, 3, 5, 7, 9] {
        for code in enumerate_chains(n).unwrap() {
            assert_eq!(
                code.log2_size(),
                code.predicted_log2_size(),
                "{}",
                code.id()
            );
        }
    }
}

// Not claimed at even length, but it holds for every chain at these lengths.
#[test]
fn size_law_at_even_length() {
    for n in [2, 4, 6, 8] {
        for code in enumerate_chains(n).unwrap() {
            assert_eq!(
                code.log2_size(),
                code.predicted_log2_size(),
                "{}",
                code.id()
            );
        }
    }
}

#[test]
fn reverse_complement_chains_are_self_reciprocal() {
    for n in 1..=9 {
        for code in enumerate_chains(n).unwrap() {
            if code.is_reverse_complement() {
                assert!(
                    code.self_reciprocal_flags().iter().all(|&b| b),
                    "{}",
                    code.id()
                );
            }
        }
    }
}

#[test]
fn rc_sufficient_implies_reverse_complement() {
    for n in 1..=9 {
        for code in enumerate_chains(n).unwrap() {
            if code.rc_sufficient() {
                assert!(code.is_reverse_complement(), "{}", code.id());
            }
        }
    }
}

// Brute force: a code is reverse-complement iff the set of its words is.
#[test]
fn rc_check_matches_exhaustive_closure() {
    for n in 1..=4 {
        for code in enumerate_chains(n).unwrap() {
            if code.log2_size() > 12 {
                continue;
            }
            let words: HashSet<RingWord> = code.codewords(DEFAULT_CAP).unwrap().collect();
            let closed = words
                .iter()
                .all(|w| words.contains(&w.reverse_complement()));
            assert_eq!(code.is_reverse_complement(), closed, "{}", code.id());
        }
    }
}

#[test]
fn negacyclic_lengths_give_reverse_complement_codes() {
    for n in 1..=12 {
        let fz = factor_xn_minus_1(n).unwrap();
        if !negacyclic_condition(fz.m).unwrap().holds {
            continue;
        }
        assert!(
            fz.factors.iter().all(|f| f.poly.is_self_reciprocal()),
            "n={n}"
        );
        for code in enumerate_chains(n).unwrap() {
            if code.contains(&code.all_ones_word()).unwrap() {
                assert!(code.is_reverse_complement(), "{}", code.id());
            }
        }
    }
}

#[test]
fn reverse_complement_codes_contain_the_all_ones_word() {
    for n in 1..=7 {
        for code in enumerate_chains(n).unwrap() {
            if code.is_reverse_complement() {
                assert!(
                    code.contains(&code.all_ones_word()).unwrap(),
                    "{}",
                    code.id()
                );
            }
        }
    }
}

#[test]
fn non_self_reciprocal_factor_at_length_7() {
    let fz = factor_xn_minus_1(7).unwrap();
    let x3 = PolyF2::from_exponents([0, 1, 3]);
    let f = fz
        .factors
        .iter()
        .find(|f| f.poly == x3)
        .expect("1+x+x^3 divides x^7-1");
    assert!(!f.poly.is_self_reciprocal());
    assert!(!negacyclic_condition(7).unwrap().holds);
    // <1+x+x^3> is not reverse-complement: its reversal is generated by the reciprocal
    let code = CyclicCodeR::new(7, [x3.clone(), x3.clone(), x3.clone(), x3]).unwrap();
    assert!(!code.is_reverse_complement());
}

// Codewords of C that are multiples of 1+u^2 are exactly <(1+u)^2 f2, (1+u)^3 f3>.
#[test]
fn subcode_is_generated_by_the_last_two_layers() {
    for n in 1..=7 {
        for code in enumerate_chains(n).unwrap() {
            let [_, _, f2, f3] = code.chain();
            let gens = [
                RingWord::from_poly_f2(f2, n).scale(one_plus_u_pow(2)),
                RingWord::from_poly_f2(f3, n).scale(one_plus_u_pow(3)),
            ];
            let expected = Span::ideal(n, gens.iter());
            let report = code.subcode_1pu2();
            assert_eq!(report.subcode, expected, "{}", code.id());
            // the principal form <(1+u^2) f3> agrees exactly when f2 = f3
            assert_eq!(report.agrees, f2 == f3, "{}", code.id());
        }
    }
}

#[test]
fn subcode_alphabet_and_distance() {
    let tbl = WeightTable::builtin();
    for n in 1..=6 {
        for code in enumerate_chains(n).unwrap() {
            if code.log2_size() > 10 {
                continue;
            }
            let sub = code.subcode_1pu2().subcode;
            assert!(sub.is_subspace_of(code.span()));
            for w in sub.elements(DEFAULT_CAP).unwrap() {
                assert!(phi_word(&w).letters().iter().all(|l| l.is_gc()));
            }
            let d = analyze_code(&code, &tbl, DEFAULT_CAP).unwrap().d;
            let d_sub = analyze_span(code.id(), &sub, &tbl, DEFAULT_CAP).unwrap().d;
            if let (Some(d), Some(d_sub)) = (d, d_sub) {
                assert!(d_sub >= d, "{}", code.id());
            }
        }
    }
}

#[test]
fn principal_codes_match_their_chain() {
    // <g> for g = (1+u)^t f with f | x^n - 1 is the chain with f in layers t..3
    let n = 6;
    for f in ["1", "11", "111", "1001", "10101", "1000001"] {
        let f: PolyF2 = f.parse().unwrap();
        let full = PolyF2::x_pow_minus_one(n);
        for t in 0..4usize {
            let chain: [PolyF2; 4] =
                std::array::from_fn(|i| if i < t { full.clone() } else { f.clone() });
            let code = CyclicCodeR::new(n, chain).unwrap();
            let g = PolyR::from(&f).scale(one_plus_u_pow(t as u32));
            assert_eq!(
                &CyclicCodeR::principal_span(n, &g),
                code.span(),
                "t={t} f={f}"
            );
        }
    }
}
