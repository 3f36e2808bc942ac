//! Cyclic words, loop calculus, homology classes, symmetry and type D export.

mod common;

use common::{cyclic_words, naive_canonical, reduced_letters, symmetric_letters, symmetric_offsets};
use plumbcurve::error::Error;
use plumbcurve::words::*;
use proptest::prelude::*;

fn word(s: &str) -> CyclicWord {
    s.parse().expect("word")
}

#[test]
fn canonical_forms() {
    assert_eq!(word("aBB"), word("bbA"));
    assert_eq!(canonicalize(&parse_letters("aAb").unwrap()).unwrap(), CyclicWord::beta());
    assert_eq!(canonicalize(&parse_letters("aA").unwrap()), Err(Error::EmptyWord));
    assert_eq!(word("babaBAABaba").to_string(), "(aabABABABAb)");
    assert!(matches!(parse_letters("abx"), Err(Error::MalformedWord(_))));
}

#[test]
fn loop_encodings() {
    assert_eq!(loop_encode(&CyclicWord::beta()).to_string(), "c[0]");
    let w = word("bbA");
    let lw = loop_encode(&w);
    assert_eq!(loop_decode(&lw).unwrap(), w);
    assert_eq!(loop_decode(&"c[0] c[-1]".parse().unwrap()).unwrap(), w);
    let ta = word("babaBAABaba");
    let lw: LoopWord = "c[1] a[1] cc[2] b[1] c[1]".parse().unwrap();
    assert_eq!(loop_decode(&lw).unwrap(), ta);
    assert_eq!(loop_decode(&loop_encode(&ta)).unwrap(), ta);
    assert_eq!(loop_encode(&word("aaa")).to_string(), "b[3]");
}

#[test]
fn loop_letters_expand_to_their_words() {
    use Letter::*;
    assert_eq!(LoopLetter::a(2).letters(), vec![Beta, Alpha, Alpha, BetaInv]);
    assert_eq!(LoopLetter::b(-1).letters(), vec![AlphaInv]);
    assert_eq!(LoopLetter::c(-2).letters(), vec![Beta, AlphaInv, AlphaInv]);
    assert_eq!(LoopLetter::cbar(1).letters(), vec![AlphaInv, BetaInv]);
}

#[test]
fn curve_classes() {
    let c = curve_class(&MultiCurve::single(CyclicWord::beta())).total;
    assert_eq!((c.b, c.a, c.hst_type), (1, 0, HstType::Alpha));
    let ta = CurveClass::of_letters(word("babaBAABaba").letters());
    assert_eq!((ta.b.abs(), ta.a.abs()), (1, 2));
    assert_eq!((ta.beta_letters, ta.alpha_letters, ta.hst_type), (5, 6, HstType::Alpha));
    let tb = CurveClass::of_letters(word("baabaaababaaabaaababaaa").letters());
    assert_eq!((tb.b.abs(), tb.a.abs(), tb.hst_type), (7, 16, HstType::Alpha));
    assert_eq!(HstType::from_counts(1, 0), HstType::Beta);
    assert_eq!(HstType::from_counts(1, 1), HstType::AlphaBeta);
    assert_eq!(HstType::from_counts(2, 2), HstType::None);
}

#[test]
fn symmetry_examples() {
    assert!(symmetry_offset(&CyclicWord::beta()).is_some());
    assert!(symmetry_offset(&word("babaBAABaba")).is_some());
    assert!(symmetry_offset(&word("babbA")).is_none());
    // (β α β α⁻¹) reads as a palindrome from its second letter
    assert!(symmetry_offset(&word("babA")).is_some());
}

#[test]
fn type_d_of_the_staircase_word() {
    use Rho::*;
    let d = type_d_letters(&parse_letters("babaBAABaba").unwrap());
    assert_eq!(d.generators.len(), 11);
    let labels: Vec<Rho> = d.arrows.iter().map(|a| a.label).collect();
    assert_eq!(labels, vec![R3, R1, R3, R2, R1, R23, R3, R123, R1, R3, R1]);

    let beta = to_type_d(&CyclicWord::beta());
    assert_eq!(beta.generators, vec![Idempotent::Iota0]);
    assert_eq!(beta.arrows.len(), 1);
    assert_eq!((beta.arrows[0].label, beta.arrows[0].source(), beta.arrows[0].target()), (R12, 0, 0));

    let ba = type_d_letters(&parse_letters("ba").unwrap());
    assert_eq!(ba.generators, vec![Idempotent::Iota0, Idempotent::Iota1]);
    let arrows: Vec<(Rho, usize, usize)> = ba.arrows.iter().map(|a| (a.label, a.source(), a.target())).collect();
    assert_eq!(arrows, vec![(R3, 0, 1), (R1, 0, 1)]);
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn canonical_form_is_the_least_rotation(w in reduced_letters(14)) {
        let c = canonicalize(&w).unwrap();
        prop_assert_eq!(c.letters(), &naive_canonical(&w)[..]);
    }

    #[test]
    fn rendering_round_trips(w in cyclic_words(14)) {
        prop_assert_eq!(w.to_string().parse::<CyclicWord>().unwrap(), w.clone());
        let lw = loop_encode(&w);
        prop_assert_eq!(lw.to_string().parse::<LoopWord>().unwrap(), lw);
    }

    #[test]
    fn symmetry_offset_matches_exhaustive_search(w in reduced_letters(12)) {
        let found = symmetry_offset_letters(&w);
        let all = symmetric_offsets(&w);
        match found {
            Some(o) => prop_assert!(all.contains(&o), "{} not among {:?}", o, all),
            None => prop_assert!(all.is_empty()),
        }
    }

    #[test]
    fn constructed_symmetric_words_are_detected(w in symmetric_letters(8)) {
        prop_assert!(symmetry_offset_letters(&w).is_some());
    }

    #[test]
    fn every_type_d_generator_meets_two_arrows(w in cyclic_words(14)) {
        let d = to_type_d(&w);
        let mut ends = vec![0usize; d.generators.len()];
        for a in &d.arrows {
            ends[a.source()] += 1;
            ends[a.target()] += 1;
        }
        prop_assert!(ends.iter().all(|&e| e == 2), "{:?}", ends);
    }

    #[test]
    fn arrow_labels_respect_idempotents(w in cyclic_words(14)) {
        use Idempotent::*;
        let d = to_type_d(&w);
        for a in &d.arrows {
            let ends = match a.label {
                Rho::R1 | Rho::R3 | Rho::R123 => (Iota0, Iota1),
                Rho::R2 => (Iota1, Iota0),
                Rho::R12 => (Iota0, Iota0),
                Rho::R23 => (Iota1, Iota1),
            };
            prop_assert_eq!((d.generators[a.source()], d.generators[a.target()]), ends);
        }
    }
}
