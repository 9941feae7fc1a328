//! Reduced words in the free group on two generators x and y.
//!
//! Letters are written x, X, y, Y with X = x^{-1} and Y = y^{-1}.  A `Word`
//! is reduced by construction; a `CyclicWord` is cyclically reduced and
//! compares equal to its rotations.

pub mod automorphisms;
pub mod patterns;

use crate::error::{Error, Result};

/// One of the two free generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    X,
    Y,
}

/// A single letter: a generator or its inverse.
///
/// Encoded in two bits as x = 0, X = 1, y = 2, Y = 3, so that inversion is
/// a single bit flip.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(u8);

pub const X_POS: Letter = Letter(0);
pub const X_NEG: Letter = Letter(1);
pub const Y_POS: Letter = Letter(2);
pub const Y_NEG: Letter = Letter(3);

/// All four letters, in enumeration order.
pub const ALPHABET: [Letter; 4] = [X_POS, X_NEG, Y_POS, Y_NEG];

impl Letter {
    pub fn generator(self) -> Generator {
        if self.0 < 2 {
            Generator::X
        } else {
            Generator::Y
        }
    }

    /// +1 for a generator, -1 for an inverse.
    pub fn sign(self) -> i32 {
        if self.0 & 1 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn inverse(self) -> Letter {
        Letter(self.0 ^ 1)
    }

    pub fn from_char(c: char) -> Result<Letter> {
        match c {
            'x' => Ok(X_POS),
            'X' => Ok(X_NEG),
            'y' => Ok(Y_POS),
            'Y' => Ok(Y_NEG),
            other => Err(Error::BadLetter(other)),
        }
    }

    pub fn to_char(self) -> char {
        [b'x', b'X', b'y', b'Y'][self.0 as usize] as char
    }

    pub(crate) fn index(self) -> usize {
        self.0 as usize
    }
}

impl std::fmt::Debug for Letter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// A reduced word (no adjacent inverse pair).  The empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Word {
        Word::default()
    }

    /// Free reduction of an arbitrary letter sequence.
    pub fn reduced(letters: impl IntoIterator<Item = Letter>) -> Word {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { letters: out }
    }

    pub fn parse(s: &str) -> Result<Word> {
        let mut letters = Vec::with_capacity(s.len());
        for c in s.chars() {
            letters.push(Letter::from_char(c)?);
        }
        Ok(Word::reduced(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    /// Reduced product of this word and another.
    pub fn concat(&self, rhs: &Word) -> Word {
        let mut out = self.letters.clone();
        for &l in &rhs.letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { letters: out }
    }

    /// g w g^{-1}, reduced.
    pub fn conjugated_by(&self, g: &Word) -> Word {
        g.concat(self).concat(&g.inverse())
    }

    pub fn pow(&self, n: usize) -> Word {
        let mut out = Word::empty();
        for _ in 0..n {
            out = out.concat(self);
        }
        out
    }

    /// Split off the conjugating prefix: w = c u c^{-1} with u cyclically
    /// reduced.  Returns (u, c).
    pub fn cyclic_reduce(&self) -> Result<(CyclicWord, Word)> {
        if self.is_empty() {
            return Err(Error::TrivialWord);
        }
        let mut lo = 0usize;
        let mut hi = self.letters.len();
        while hi - lo >= 2 && self.letters[lo] == self.letters[hi - 1].inverse() {
            lo += 1;
            hi -= 1;
        }
        let core = CyclicWord { letters: self.letters[lo..hi].to_vec() };
        let conj = Word { letters: self.letters[..lo].to_vec() };
        Ok((core, conj))
    }
}

impl std::fmt::Display for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        for l in &self.letters {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

impl serde::Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A cyclically reduced word considered up to rotation.
#[derive(Debug, Clone, Eq)]
pub struct CyclicWord {
    letters: Vec<Letter>,
}

impl CyclicWord {
    /// Wrap an already cyclically reduced sequence.  The stored rotation is
    /// preserved (it is often meaningful to the caller); equality ignores it.
    pub fn new(letters: Vec<Letter>) -> Result<CyclicWord> {
        if letters.is_empty() {
            return Err(Error::TrivialWord);
        }
        let w = Word::reduced(letters.iter().copied());
        if w.len() != letters.len() || letters[0] == letters[letters.len() - 1].inverse() {
            // Not cyclically reduced as handed in; normalize through cyclic_reduce.
            let (core, _) = w.cyclic_reduce()?;
            return Ok(core);
        }
        Ok(CyclicWord { letters })
    }

    pub fn parse(s: &str) -> Result<CyclicWord> {
        let (core, _) = Word::parse(s)?.cyclic_reduce()?;
        Ok(core)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The stored rotation as a linear word.
    pub fn linear(&self) -> Word {
        Word { letters: self.letters.clone() }
    }

    pub fn rotated(&self, k: usize) -> CyclicWord {
        let n = self.letters.len();
        let mut letters = Vec::with_capacity(n);
        for i in 0..n {
            letters.push(self.letters[(k + i) % n]);
        }
        CyclicWord { letters }
    }

    pub fn inverse(&self) -> CyclicWord {
        CyclicWord { letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    /// Lexicographically smallest rotation; canonical representative for
    /// hashing and deduplication.
    pub fn canonical_rotation(&self) -> Vec<Letter> {
        let n = self.letters.len();
        let mut best: Option<Vec<Letter>> = None;
        for k in 0..n {
            let cand: Vec<Letter> = (0..n).map(|i| self.letters[(k + i) % n]).collect();
            if best.as_ref().map_or(true, |b| cand < *b) {
                best = Some(cand);
            }
        }
        best.expect("nonempty")
    }

    /// The letter sequence is periodic with this smallest period; the first
    /// `period` letters form the primitive root.
    pub fn primitive_root(&self) -> CyclicWord {
        let n = self.letters.len();
        for p in 1..=n {
            if n % p == 0 && (p..n).all(|i| self.letters[i] == self.letters[i - p]) {
                return CyclicWord { letters: self.letters[..p].to_vec() };
            }
        }
        self.clone()
    }

    /// True if the two cyclic words are equal up to rotation or are inverse
    /// to each other up to rotation (same unoriented closed curve).
    pub fn same_unoriented_class(&self, other: &CyclicWord) -> bool {
        self == other || self.inverse() == *other
    }
}

impl PartialEq for CyclicWord {
    fn eq(&self, other: &Self) -> bool {
        self.letters.len() == other.letters.len()
            && self.canonical_rotation() == other.canonical_rotation()
    }
}

impl std::hash::Hash for CyclicWord {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.canonical_rotation().hash(state);
    }
}

impl std::fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

impl serde::Serialize for CyclicWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// All reduced words of length at most `max_len`, in length-then-lex order.
/// The empty word is included.
pub fn reduced_words_up_to(max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut frontier: Vec<Vec<Letter>> = vec![vec![]];
    for _ in 0..max_len {
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
        out.extend(next.iter().map(|v| Word { letters: v.clone() }));
        frontier = next;
    }
    out
}

/// All cyclically reduced words with length in `min_len..=max_len`.
pub fn cyclically_reduced_words(min_len: usize, max_len: usize) -> Vec<Word> {
    reduced_words_up_to(max_len)
        .into_iter()
        .filter(|w| {
            w.len() >= min_len.max(1)
                && w.letters[0] != w.letters[w.len() - 1].inverse()
        })
        .collect()
}

/// One representative per rotation class of cyclically reduced words of
/// length 1..=max_len (oriented conjugacy classes).
pub fn conjugacy_classes_up_to(max_len: usize) -> Vec<CyclicWord> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for w in cyclically_reduced_words(1, max_len) {
        let cw = CyclicWord { letters: w.letters().to_vec() };
        if seen.insert(cw.canonical_rotation()) {
            out.push(cw);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn reduction() {
        assert_eq!(w("xX"), Word::empty());
        assert_eq!(w("xyYx"), w("xx"));
        let already = w("xYxy");
        assert_eq!(Word::reduced(already.letters().to_vec()), already);
    }

    #[test]
    fn parser_rejects_garbage() {
        assert!(matches!(Word::parse("xz"), Err(Error::BadLetter('z'))));
        assert!(Word::parse("").unwrap().is_empty());
    }

    #[test]
    fn display_roundtrip() {
        for s in ["x", "xY", "xyXY", "YYx"] {
            assert_eq!(w(s).to_string(), s);
        }
        assert_eq!(Word::empty().to_string(), "e");
    }

    #[test]
    fn inverse_and_concat() {
        assert_eq!(w("xyXY").inverse(), w("yxYX"));
        assert_eq!(w("xy").concat(&w("Yx")), w("xx"));
        assert_eq!(w("xy").concat(&w("YX")), Word::empty());
    }

    #[test]
    fn cyclic_reduction() {
        let (core, conj) = w("xyX").cyclic_reduce().unwrap();
        assert_eq!(core.letters(), w("y").letters());
        assert_eq!(conj, w("x"));
        // already cyclically reduced
        let (core, conj) = w("xYxy").cyclic_reduce().unwrap();
        assert_eq!(core.linear(), w("xYxy"));
        assert!(conj.is_empty());
        // reduce first (x.xyx.x^{-1} collapses to xxy, already cyclically
        // reduced and a rotation of xyx)
        let (core, conj) = w("x").concat(&w("xyx")).concat(&w("X")).cyclic_reduce().unwrap();
        assert_eq!(core, CyclicWord::parse("xyx").unwrap());
        assert_eq!(core.linear(), w("xxy"));
        assert!(conj.is_empty());
        // a genuinely conjugated input keeps its conjugator
        let (core, conj) = w("y").concat(&w("xyx")).concat(&w("Y")).cyclic_reduce().unwrap();
        assert_eq!(core, CyclicWord::parse("xyx").unwrap());
        assert_eq!(conj, w("y"));
        assert!(Word::empty().cyclic_reduce().is_err());
    }

    #[test]
    fn cyclic_equality_up_to_rotation() {
        let a = CyclicWord::parse("xyx").unwrap();
        assert_eq!(a, a.rotated(1));
        assert_eq!(a, a.rotated(2));
        assert_ne!(a, CyclicWord::parse("xxx").unwrap());
    }

    #[test]
    fn primitive_roots() {
        let sq = CyclicWord::parse("xyxy").unwrap();
        assert_eq!(sq.primitive_root(), CyclicWord::parse("xy").unwrap());
        let prim = CyclicWord::parse("xYxyx").unwrap();
        assert_eq!(prim.primitive_root(), prim);
    }

    #[test]
    fn enumeration_counts() {
        // 4 * 3^(n-1) reduced words of each length n >= 1.
        let words = reduced_words_up_to(4);
        assert_eq!(words.len(), 1 + 4 + 12 + 36 + 108);
        let cyc = cyclically_reduced_words(1, 2);
        assert_eq!(cyc.len(), 4 + 12); // no length-2 word s s^{-1} is reduced anyway
    }
}
