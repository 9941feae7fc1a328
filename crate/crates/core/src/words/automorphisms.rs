//! Elementary automorphisms (relabelings of the generators) and a small
//! catalog of Nielsen substitutions.

use super::{CyclicWord, Generator, Letter, Word, X_NEG, X_POS, Y_NEG, Y_POS};

/// An automorphism generated by swapping x and y and/or inverting either
/// generator.  There are exactly eight: the images of x and y may be any two
/// letters over distinct generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ElementaryAut {
    image_x: Letter,
    image_y: Letter,
}

impl ElementaryAut {
    pub const IDENTITY: ElementaryAut = ElementaryAut { image_x: X_POS, image_y: Y_POS };

    /// The full eight-element group.
    pub fn all() -> [ElementaryAut; 8] {
        let mut out = [ElementaryAut::IDENTITY; 8];
        let mut i = 0;
        for ix in [X_POS, X_NEG, Y_POS, Y_NEG] {
            for iy in [X_POS, X_NEG, Y_POS, Y_NEG] {
                if ix.generator() != iy.generator() {
                    out[i] = ElementaryAut { image_x: ix, image_y: iy };
                    i += 1;
                }
            }
        }
        debug_assert_eq!(i, 8);
        out
    }

    pub fn apply_letter(&self, l: Letter) -> Letter {
        let img = match l.generator() {
            Generator::X => self.image_x,
            Generator::Y => self.image_y,
        };
        if l.sign() > 0 {
            img
        } else {
            img.inverse()
        }
    }

    /// Letter-by-letter image; stays reduced because the letter map is a
    /// bijection commuting with inversion.
    pub fn apply(&self, w: &Word) -> Word {
        Word::reduced(w.letters().iter().map(|&l| self.apply_letter(l)))
    }

    pub fn apply_cyclic(&self, w: &CyclicWord) -> CyclicWord {
        CyclicWord::new(w.letters().iter().map(|&l| self.apply_letter(l)).collect())
            .expect("image of nonempty cyclic word")
    }

    pub fn compose(&self, inner: &ElementaryAut) -> ElementaryAut {
        ElementaryAut {
            image_x: self.apply_letter(inner.image_x),
            image_y: self.apply_letter(inner.image_y),
        }
    }
}

/// True when some elementary automorphism carries one word to the other.
pub fn equivalent(a: &Word, b: &Word) -> bool {
    a.len() == b.len() && ElementaryAut::all().iter().any(|e| &e.apply(a) == b)
}

/// Nielsen substitutions that fix one generator and multiply the other by it
/// on one side, plus the identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NielsenMap {
    Identity,
    /// x -> xy
    XToXy,
    /// x -> yx
    XToYx,
    /// x -> x y^{-1}
    XToXYinv,
    /// x -> y^{-1} x
    XToYinvX,
    /// y -> yx
    YToYx,
    /// y -> xy
    YToXy,
    /// y -> y x^{-1}
    YToYXinv,
    /// y -> x^{-1} y
    YToXinvY,
}

impl NielsenMap {
    pub const ALL: [NielsenMap; 9] = [
        NielsenMap::Identity,
        NielsenMap::XToXy,
        NielsenMap::XToYx,
        NielsenMap::XToXYinv,
        NielsenMap::XToYinvX,
        NielsenMap::YToYx,
        NielsenMap::YToXy,
        NielsenMap::YToYXinv,
        NielsenMap::YToXinvY,
    ];

    /// Images of the two generators as words.
    fn images(self) -> (Word, Word) {
        let w = |s: &str| Word::parse(s).expect("fixed catalog");
        match self {
            NielsenMap::Identity => (w("x"), w("y")),
            NielsenMap::XToXy => (w("xy"), w("y")),
            NielsenMap::XToYx => (w("yx"), w("y")),
            NielsenMap::XToXYinv => (w("xY"), w("y")),
            NielsenMap::XToYinvX => (w("Yx"), w("y")),
            NielsenMap::YToYx => (w("x"), w("yx")),
            NielsenMap::YToXy => (w("x"), w("xy")),
            NielsenMap::YToYXinv => (w("x"), w("yX")),
            NielsenMap::YToXinvY => (w("x"), w("Xy")),
        }
    }

    pub fn apply_word(self, w: &Word) -> Word {
        let (ix, iy) = self.images();
        let mut out = Word::empty();
        for &l in w.letters() {
            let img = match l.generator() {
                Generator::X => &ix,
                Generator::Y => &iy,
            };
            if l.sign() > 0 {
                out = out.concat(img);
            } else {
                out = out.concat(&img.inverse());
            }
        }
        out
    }
}

/// Rewrite a conjugacy class under a Nielsen substitution and cyclically
/// reduce the result.
pub fn nielsen_change_of_basis(w: &CyclicWord, map: NielsenMap) -> CyclicWord {
    let image = map.apply_word(&w.linear());
    let (core, _) = image.cyclic_reduce().expect("automorphism image of nontrivial class");
    core
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn eight_distinct_maps() {
        let all = ElementaryAut::all();
        for i in 0..8 {
            for j in 0..8 {
                if i != j {
                    assert_ne!(all[i], all[j]);
                }
            }
        }
    }

    #[test]
    fn swap_and_invert_examples() {
        let swap = ElementaryAut::all()
            .into_iter()
            .find(|e| e.apply(&w("x")) == w("y") && e.apply(&w("y")) == w("x"))
            .unwrap();
        assert_eq!(swap.apply(&w("xY")), w("yX"));
        let invert_x = ElementaryAut::all()
            .into_iter()
            .find(|e| e.apply(&w("x")) == w("X") && e.apply(&w("y")) == w("y"))
            .unwrap();
        assert_eq!(invert_x.apply(&w("xyx")), w("XyX"));
        assert_eq!(ElementaryAut::IDENTITY.apply(&w("xYxy")), w("xYxy"));
    }

    #[test]
    fn length_preserving_and_closed_under_composition() {
        let all = ElementaryAut::all();
        let word = w("xxYxY");
        for e in all {
            assert_eq!(e.apply(&word).len(), word.len());
        }
        for a in all {
            for b in all {
                let c = a.compose(&b);
                assert!(all.contains(&c));
                assert_eq!(a.apply(&b.apply(&word)), c.apply(&word));
            }
        }
    }

    #[test]
    fn equivalence_examples() {
        assert!(equivalent(&w("yxY"), &w("xyX")));
        assert!(equivalent(&w("xx"), &w("YY")));
        assert!(!equivalent(&w("xx"), &w("xy")));
    }

    #[test]
    fn nielsen_cancellation_example() {
        // y -> x^{-1} y sends xy to x x^{-1} y = y.
        let out = nielsen_change_of_basis(&CyclicWord::parse("xy").unwrap(), NielsenMap::YToXinvY);
        assert_eq!(out, CyclicWord::parse("y").unwrap());
        let id = nielsen_change_of_basis(&CyclicWord::parse("xYx").unwrap(), NielsenMap::Identity);
        assert_eq!(id, CyclicWord::parse("xYx").unwrap());
    }

    #[test]
    fn nielsen_shortens_the_alternating_family() {
        // Applying x -> x y^{-1} to (xy)^n x gives (x)^n x-ish shorter words;
        // record only that some catalog map strictly shortens each member.
        for n in 1..=4 {
            let word = CyclicWord::new(w("xy").pow(n).concat(&w("x")).letters().to_vec()).unwrap();
            let shortened = NielsenMap::ALL
                .iter()
                .any(|&m| nielsen_change_of_basis(&word, m).len() < word.len());
            assert!(shortened, "no catalog map shortens {word}");
        }
    }
}
