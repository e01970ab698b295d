use std::collections::HashMap;

use braidcount::braid::{
    delta_conjugate, embed_pure, eval, normal_form, theta, BraidLetter, BraidWord, CosetElement,
    NormalForm,
};
use braidcount::oracle::enumerate_reduced_words;
use braidcount::words::FreeWord;
use proptest::prelude::*;

fn braid(s: &str) -> BraidWord {
    s.parse().unwrap()
}

fn all_braids(len: usize) -> Vec<BraidWord> {
    let mut out = vec![BraidWord::identity()];
    for _ in 0..len {
        out = out
            .iter()
            .flat_map(|b| {
                BraidLetter::all().into_iter().map(move |l| {
                    let mut letters = b.letters().to_vec();
                    letters.push(l);
                    BraidWord::new(letters)
                })
            })
            .collect();
    }
    out
}

fn letter() -> impl Strategy<Value = BraidLetter> {
    (0usize..4).prop_map(|i| BraidLetter::all()[i])
}

fn braid_word(max: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec(letter(), 0..max).prop_map(BraidWord::new)
}

#[test]
fn relation_suite() {
    assert_eq!(eval(&braid("s1 s2 s1")), eval(&braid("s2 s1 s2")));
    assert!(eval(&braid("D D")).is_identity());
    assert!(eval(&braid("s1 s2 s1 s2 s1 s2")).is_identity());
    assert!(!eval(&braid("D")).is_identity());
    assert_eq!(eval(&braid("D s1")), eval(&braid("s2 D")));
    assert_eq!(eval(&braid("D s2")), eval(&braid("s1 D")));
    assert_eq!(
        eval(&braid("S1 S2^4 D^4 s1")),
        eval(&braid("s2^2 s1^2 s2^2 s1^2"))
    );
    assert_eq!(
        eval(&braid("S2 S1^4 D^4 s2")),
        eval(&braid("s1^2 s2^2 s1^2 s2^2"))
    );
}

#[test]
fn normal_forms_are_sound_and_canonical_up_to_length_six() {
    let mut by_coset: HashMap<CosetElement, NormalForm> = HashMap::new();
    for len in 0..=6 {
        for b in all_braids(len) {
            let x = eval(&b);
            let f = normal_form(&x);
            assert_eq!(f.eval(), x, "{b}");
            assert!(f.satisfies_first_term_constraint(), "{b}: {f}");
            if let Some(prev) = by_coset.insert(x, f.clone()) {
                assert_eq!(prev, f);
            }
        }
    }
}

#[test]
fn theta_ignores_a_trailing_half_twist() {
    for b in all_braids(5) {
        let f0 = normal_form(&eval(&b));
        let f1 = normal_form(&eval(&(&b * &BraidWord::delta(1))));
        if let (NormalForm::General { .. }, NormalForm::General { .. }) = (&f0, &f1) {
            assert_eq!(theta(&f0).unwrap(), theta(&f1).unwrap(), "{b}");
        }
    }
}

#[test]
fn embedding_is_injective_up_to_degree_six() {
    let words = enumerate_reduced_words(6);
    let mut images = HashMap::new();
    images.insert(embed_pure(&FreeWord::identity()), FreeWord::identity());
    for w in words {
        if let Some(prev) = images.insert(embed_pure(&w), w.clone()) {
            panic!("{prev} and {w} have the same image");
        }
    }
}

#[test]
fn delta_conjugation_swaps_generators() {
    let d = CosetElement::delta();
    for w in enumerate_reduced_words(4) {
        let lhs = &(&d * &embed_pure(&w)) * &d.inverse();
        assert_eq!(lhs, embed_pure(&delta_conjugate(&w)));
    }
}

proptest! {
    #[test]
    fn eval_is_multiplicative(u in braid_word(12), v in braid_word(12)) {
        prop_assert_eq!(eval(&(&u * &v)), &eval(&u) * &eval(&v));
        prop_assert!((&eval(&u) * &eval(&u.inverse())).is_identity());
    }

    #[test]
    fn braid_text_round_trips(b in braid_word(16)) {
        let back: BraidWord = b.to_string().parse().unwrap();
        prop_assert_eq!(back, b);
    }

    #[test]
    fn normal_form_round_trips(b in braid_word(24)) {
        let x = eval(&b);
        let f = normal_form(&x);
        prop_assert_eq!(f.eval(), x);
        prop_assert!(f.satisfies_first_term_constraint());
    }
}
