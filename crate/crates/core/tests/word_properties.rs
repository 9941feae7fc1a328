//! Exhaustive and property-based checks of the word engine.

use proptest::prelude::*;

use hyperproj::words::automorphisms::{equivalent, ElementaryAut};
use hyperproj::words::{
    cyclically_reduced_words, reduced_words_up_to, Letter, Word, ALPHABET,
};

fn arb_letter() -> impl Strategy<Value = Letter> {
    (0usize..4).prop_map(|i| ALPHABET[i])
}

proptest! {
    #[test]
    fn reduce_is_idempotent_and_non_increasing(raw in prop::collection::vec(arb_letter(), 0..40)) {
        let once = Word::reduced(raw.clone());
        prop_assert!(once.len() <= raw.len());
        let twice = Word::reduced(once.letters().to_vec());
        prop_assert_eq!(&once, &twice);
        // no adjacent inverse pair survives
        for pair in once.letters().windows(2) {
            prop_assert_ne!(pair[0], pair[1].inverse());
        }
    }

    #[test]
    fn parse_print_roundtrip(raw in prop::collection::vec(arb_letter(), 1..20)) {
        let word = Word::reduced(raw);
        prop_assume!(!word.is_empty());
        let printed = word.to_string();
        prop_assert_eq!(Word::parse(&printed).unwrap(), word);
    }

    #[test]
    fn inverse_is_an_involution_and_kills_the_word(raw in prop::collection::vec(arb_letter(), 0..24)) {
        let word = Word::reduced(raw);
        prop_assert_eq!(word.inverse().inverse(), word.clone());
        prop_assert!(word.concat(&word.inverse()).is_empty());
    }

    #[test]
    fn equivalence_is_symmetric(raw in prop::collection::vec(arb_letter(), 1..10), pick in 0usize..8) {
        let a = Word::reduced(raw);
        let b = ElementaryAut::all()[pick].apply(&a);
        prop_assert!(equivalent(&a, &b));
        prop_assert!(equivalent(&b, &a));
    }
}

/// Reduced length of g^{-1} w g without heap traffic, for the brute-force
/// conjugacy oracle below.
fn conjugate_length(w: &[Letter], g: &[Letter]) -> usize {
    let mut buf = [ALPHABET[0]; 32];
    let mut top = 0usize;
    let mut push = |buf: &mut [Letter; 32], top: &mut usize, l: Letter| {
        if *top > 0 && buf[*top - 1] == l.inverse() {
            *top -= 1;
        } else {
            buf[*top] = l;
            *top += 1;
        }
    };
    for &l in g.iter().rev() {
        push(&mut buf, &mut top, l.inverse());
    }
    for &l in w {
        push(&mut buf, &mut top, l);
    }
    for &l in g {
        push(&mut buf, &mut top, l);
    }
    top
}

/// The cyclic reduction realizes the minimal length over the conjugacy
/// class: no conjugator of length up to 8 beats it, exhaustively for all
/// reduced words of length up to 8.
#[test]
fn cyclic_reduction_is_minimal_over_conjugates() {
    let words = reduced_words_up_to(8);
    let conjugators = reduced_words_up_to(8);
    for w in &words {
        if w.is_empty() {
            continue;
        }
        let (core, conj) = w.cyclic_reduce().unwrap();
        // the conjugator actually works
        assert_eq!(&core.linear().conjugated_by(&conj), w);
        let target = core.len();
        for g in &conjugators {
            let len = conjugate_length(w.letters(), g.letters());
            assert!(
                len >= target,
                "conjugating {w} by {g} gives length {len} below the cyclic length {target}"
            );
        }
    }
}

/// A reduced word never contains overlapping occurrences of a subword and
/// its inverse, exhaustively for all reduced words of length up to 12.
///
/// An overlap of u at i and u^{-1} at j (i < j < i + n <= j + n) forces the
/// overlapped segment to equal its own inverse; the scan below checks the
/// occurrence pairs directly, without using that reformulation.
#[test]
fn subword_and_inverse_never_overlap() {
    fn is_inverse_of(a: &[Letter], b: &[Letter]) -> bool {
        debug_assert_eq!(a.len(), b.len());
        a.iter().zip(b.iter().rev()).all(|(x, y)| *x == y.inverse())
    }
    let mut frontier: Vec<Vec<Letter>> = vec![vec![]];
    for _ in 0..12 {
        let mut next = Vec::with_capacity(frontier.len() * 3);
        for w in &frontier {
            for l in ALPHABET {
                if w.last() == Some(&l.inverse()) {
                    continue;
                }
                let mut v = w.clone();
                v.push(l);
                next.push(v);
            }
        }
        for w in &next {
            let len = w.len();
            for n in 2..=len {
                for i in 0..=(len - n) {
                    // overlapping second occurrence: j in (i, i + n)
                    for j in (i + 1)..(i + n).min(len - n + 1) {
                        assert!(
                            !is_inverse_of(&w[i..i + n], &w[j..j + n]),
                            "overlap in {:?} at ({i}, {j}, {n})",
                            w
                        );
                    }
                }
            }
        }
        frontier = next;
    }
}

/// The elementary maps form a group of order eight in which the three
/// generators are involutions.
#[test]
fn elementary_maps_form_the_expected_group() {
    let all = ElementaryAut::all();
    let word = Word::parse("xxYxyX").unwrap();
    for e in all {
        // e has order 1, 2 or 4, and composing with itself stays in the set
        let e2 = e.compose(&e);
        assert!(all.contains(&e2));
        let e4 = e2.compose(&e2);
        assert_eq!(e4, ElementaryAut::IDENTITY, "order divides 4");
        assert_eq!(e.apply(&word).len(), word.len());
    }
    // generators: swap, invert x, invert y are involutions
    let w = |s: &str| Word::parse(s).unwrap();
    for (gx, gy) in [("y", "x"), ("X", "y"), ("x", "Y")] {
        let e = all
            .into_iter()
            .find(|e| e.apply(&w("x")) == w(gx) && e.apply(&w("y")) == w(gy))
            .unwrap();
        assert_eq!(e.compose(&e), ElementaryAut::IDENTITY);
    }
}

/// Counting sanity for the corpus helpers.
#[test]
fn enumeration_counts() {
    // 4 * 3^(n-1) reduced words of length n
    assert_eq!(reduced_words_up_to(5).len(), 1 + 4 + 12 + 36 + 108 + 324);
    // of the 36 reduced length-3 words, 8 end in the inverse of their head
    assert_eq!(cyclically_reduced_words(3, 3).len(), 28);
    assert_eq!(cyclically_reduced_words(2, 2).len(), 12);
}
