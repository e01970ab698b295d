use braidcount::oracle::brute_free_conjugator;
use braidcount::words::{
    are_conjugate_free, conjugating_element, cyclic_reduce, is_cyclically_syllable_reduced,
    syllable_decompose, term_rotations, FreeWord, Generator, Term,
};
use proptest::prelude::*;

fn term() -> impl Strategy<Value = Term> {
    (prop::bool::ANY, prop_oneof![-3i64..=-1, 1i64..=3])
        .prop_map(|(first, e)| Term::new(if first { Generator::A1 } else { Generator::A2 }, e))
}

fn word(max_terms: usize) -> impl Strategy<Value = FreeWord> {
    prop::collection::vec(term(), 0..max_terms).prop_map(FreeWord::from_terms)
}

fn is_reduced(w: &FreeWord) -> bool {
    w.terms()
        .windows(2)
        .all(|p| p[0].generator() != p[1].generator())
        && w.terms().iter().all(|t| t.exponent() != 0)
}

#[test]
fn distinct_free_conjugacy_classes() {
    let a1: FreeWord = "a1".parse().unwrap();
    let a1sq: FreeWord = "a1^2".parse().unwrap();
    assert!(!are_conjugate_free(&a1, &a1sq));
    assert_eq!(brute_free_conjugator(&a1, &a1sq, 6), None);
}

#[test]
fn cyclic_syllable_reduction_examples() {
    let w = |s: &str| s.parse::<FreeWord>().unwrap();
    assert!(is_cyclically_syllable_reduced(&w("a1^2 a2^-2")).unwrap());
    assert!(is_cyclically_syllable_reduced(&w("a1 a2 a1 a2")).unwrap());
    assert!(!is_cyclically_syllable_reduced(&w("a1 a2^2 a1 a2")).unwrap());
    assert!(is_cyclically_syllable_reduced(&w("a1 a2 A1")).is_err());
}

proptest! {
    #[test]
    fn products_stay_reduced(u in word(8), v in word(8)) {
        let p = &u * &v;
        prop_assert!(is_reduced(&p));
        prop_assert!((&p * &p.inverse()).is_identity());
        prop_assert_eq!(&(&p * &v.inverse()), &u);
    }

    #[test]
    fn word_text_round_trips(w in word(10)) {
        let back: FreeWord = w.to_string().parse().unwrap();
        prop_assert_eq!(back, w);
    }

    #[test]
    fn syllables_reassemble_the_word(w in word(10)) {
        let s = syllable_decompose(&w);
        prop_assert_eq!(s.expand(), w.clone());
        prop_assert_eq!(s.degrees().iter().sum::<u64>(), w.degree());
    }

    #[test]
    fn conjugates_are_detected(w in word(6), g in word(6)) {
        let c = &(&g.inverse() * &w) * &g;
        prop_assert!(are_conjugate_free(&w, &c));
        let h = conjugating_element(&w, &c).unwrap();
        prop_assert_eq!(&(&h.inverse() * &w) * &h, c.clone());
        let r = cyclic_reduce(&w);
        prop_assert!(r.core.is_identity() || r.core.is_cyclically_reduced());
        prop_assert_eq!(&(&r.conjugator * &r.core) * &r.conjugator.inverse(), w.clone());
        let rc = cyclic_reduce(&c);
        if !r.core.is_identity() {
            prop_assert!(term_rotations(&r.core).contains(&rc.core));
        }
    }
}
