//! Axes in the tree dual to the rose with two loops (the Cayley tree of the
//! free group on x and y), and overlaps between an axis and its translates.
//!
//! Everything here is exact: axes are materialized as vertex paths and
//! overlaps are literal path intersections, so the word-level consequences
//! can be checked against an independent, obviously-correct model.

use serde::Serialize;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::words::{reduced_words_up_to, cyclically_reduced_words, CyclicWord, Letter, Word};

/// The axis of a nontrivial element, materialized out to a radius.
///
/// Vertices are listed in translation order; `letters[i]` labels the edge
/// from `vertices[i]` to `vertices[i + 1]`.
#[derive(Debug, Clone)]
pub struct AxisPath {
    pub vertices: Vec<Word>,
    pub letters: Vec<Letter>,
    /// Index into the repeating cyclic word of the letter at position 0.
    phase: usize,
    period: usize,
}

/// Vertices of the axis of `alpha` whose labels have length at most `radius`.
///
/// With alpha = c u c^{-1} (u cyclically reduced), these are the reduced
/// words c p for p a prefix of a power of u or of u^{-1}; they form a path.
pub fn axis_vertices(alpha: &Word, radius: usize) -> Result<Vec<Word>> {
    let path = axis_path(alpha, radius)?;
    Ok(path.vertices)
}

/// Materialize the axis path out to vertex-label length `radius`.
pub fn axis_path(alpha: &Word, radius: usize) -> Result<AxisPath> {
    let (core, conj) = alpha.cyclic_reduce()?;
    let period = core.len();
    let reps = radius / period + 2;
    // Walk from conj * core^{-reps} forward through conj * core^{reps}.
    let mut v = conj.concat(&core.linear().inverse().pow(reps));
    let mut vertices = vec![v.clone()];
    let mut letters = Vec::new();
    for step in 0..(2 * reps * period) {
        let l = core.letters()[step % period];
        v = v.concat(&Word::reduced([l]));
        vertices.push(v.clone());
        letters.push(l);
    }
    // Distance to the base vertex is unimodal along the axis, so trimming by
    // length keeps a contiguous path.
    let keep: Vec<usize> = (0..vertices.len()).filter(|&i| vertices[i].len() <= radius).collect();
    let (first, last) = match (keep.first(), keep.last()) {
        (Some(&f), Some(&l)) => (f, l),
        _ => return Err(Error::WordTooShort { len: radius, min: conj.len() }),
    };
    debug_assert_eq!(keep.len(), last - first + 1, "trimmed axis must stay connected");
    Ok(AxisPath {
        vertices: vertices[first..=last].to_vec(),
        letters: letters[first..last].to_vec(),
        phase: first % period,
        period,
    })
}

impl AxisPath {
    /// The cyclic-word rotation read along the path starting at edge `i`.
    fn rotation_from(&self, i: usize, core: &CyclicWord) -> Vec<Letter> {
        (0..core.len()).map(|k| core.letters()[(self.phase + i + k) % self.period]).collect()
    }
}

/// The intersection of the axis of `alpha` with the axis of g alpha g^{-1}.
#[derive(Debug, Clone)]
pub struct AxisOverlap {
    /// Edge count of the shared path.
    pub length: usize,
    /// Whether the two translations traverse the shared path in the same
    /// direction; meaningful only when `length >= 1`.
    pub orientation_agrees: bool,
    /// Word read along the shared path in the direction of `alpha`.
    pub overlap_word: Word,
    /// Rest of the cyclic word of alpha after cycling the overlap to the front.
    pub gap_word_l: Word,
    /// Rest of the word read along the translated axis from the same start.
    pub gap_word_m: Word,
    /// Whether the axes share at least one vertex.  When they do not, the two
    /// gap words default to the stored rotations of the full cyclic words.
    pub touches: bool,
}

/// Compute the overlap by intersecting materialized vertex paths.  The
/// radius is chosen large enough to contain the whole overlap.
pub fn axis_overlap(alpha: &Word, g: &Word) -> Result<AxisOverlap> {
    let conj_alpha = alpha.conjugated_by(g);
    if &conj_alpha == alpha {
        return Err(Error::SameAxis);
    }
    let (core, _) = alpha.cyclic_reduce()?;
    let radius = 2 * g.len() + 2 * alpha.len() + 3 * core.len() + 4;
    let a = axis_path(alpha, radius)?;
    let b = axis_path(&conj_alpha, radius)?;

    let pos_b: HashMap<&Word, usize> = b.vertices.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let hits: Vec<(usize, usize)> = a
        .vertices
        .iter()
        .enumerate()
        .filter_map(|(i, w)| pos_b.get(w).map(|&j| (i, j)))
        .collect();

    let (core_b, _) = conj_alpha.cyclic_reduce()?;
    if hits.is_empty() {
        return Ok(AxisOverlap {
            length: 0,
            orientation_agrees: true,
            overlap_word: Word::empty(),
            gap_word_l: core.linear(),
            gap_word_m: core_b.linear(),
            touches: false,
        });
    }
    // Common vertices of two paths in a tree form a single subpath.
    for w in hits.windows(2) {
        debug_assert_eq!(w[1].0, w[0].0 + 1, "overlap must be contiguous in A");
    }

    let (i0, j0) = hits[0];
    let i1 = hits[hits.len() - 1].0;
    let length = i1 - i0;
    let rotation = a.rotation_from(i0, &core);
    if length == 0 {
        // Single shared vertex: cycle both words to start there.
        let rot_b = b.rotation_from(j0, &core_b);
        return Ok(AxisOverlap {
            length: 0,
            orientation_agrees: true,
            overlap_word: Word::empty(),
            gap_word_l: Word::reduced(rotation),
            gap_word_m: Word::reduced(rot_b),
            touches: true,
        });
    }

    let j1 = hits[1].1;
    let agrees = j1 == j0 + 1;
    let overlap_word = Word::reduced(a.letters[i0..i1].iter().copied());
    debug_assert_eq!(overlap_word.len(), length, "overlap word is a plain path word");

    // Read one full period along B in the direction of the overlap; when the
    // orientations disagree this walks B backwards with inverted letters.
    let period_b = core_b.len();
    let read_b: Vec<Letter> = if agrees {
        (0..period_b).map(|k| b.letters[j0 + k]).collect()
    } else {
        (0..period_b).map(|k| b.letters[j0 - 1 - k].inverse()).collect()
    };
    debug_assert!(
        read_b[..length] == a.letters[i0..i1],
        "reading along B must start with the overlap word"
    );

    let gap_word_l = Word::reduced(rotation[length..].iter().copied());
    let gap_word_m = Word::reduced(read_b[length..].iter().copied());
    Ok(AxisOverlap {
        length,
        orientation_agrees: agrees,
        overlap_word,
        gap_word_l,
        gap_word_m,
        touches: true,
    })
}

/// Shared segment of the axes of two arbitrary nontrivial words (not
/// necessarily conjugate): the word read along it in `alpha`'s direction and
/// whether the two translation directions agree there.  `None` when the axes
/// share at most one vertex.
pub fn common_axis_segment(alpha: &Word, beta: &Word) -> Result<Option<(Word, bool)>> {
    let radius = 2 * (alpha.len() + beta.len()) + 8;
    let a = axis_path(alpha, radius)?;
    let b = axis_path(beta, radius)?;
    let pos_b: HashMap<&Word, usize> = b.vertices.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let hits: Vec<(usize, usize)> = a
        .vertices
        .iter()
        .enumerate()
        .filter_map(|(i, w)| pos_b.get(w).map(|&j| (i, j)))
        .collect();
    if hits.len() < 2 {
        return Ok(None);
    }
    for w in hits.windows(2) {
        debug_assert_eq!(w[1].0, w[0].0 + 1, "overlap must be contiguous");
    }
    let i0 = hits[0].0;
    let i1 = hits[hits.len() - 1].0;
    let agrees = hits[1].1 == hits[0].1 + 1;
    Ok(Some((Word::reduced(a.letters[i0..i1].iter().copied()), agrees)))
}

/// Bound form that applies to an overlap instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OverlapBound {
    /// Shared edge with disagreeing directions: L(overlap) < (L(alpha)-1)/2.
    Part1,
    /// Distinct axes: L(overlap) < L(alpha) - 1.
    Part2,
}

/// One (alpha, g) overlap measurement against its bound.
#[derive(Debug, Clone, Serialize)]
pub struct LemmaReport {
    pub alpha: String,
    pub g: String,
    #[serde(rename = "L_alpha")]
    pub l_alpha: usize,
    pub overlap_len: usize,
    /// None when the overlap has no edges.
    pub directions_agree: Option<bool>,
    pub bound: OverlapBound,
    pub holds: bool,
}

/// Measure one overlap and evaluate the bound that applies to it.
/// Requires L(alpha) >= 2; propagates `SameAxis` when g stabilizes the axis.
pub fn check_lemma_bounds(alpha: &Word, g: &Word) -> Result<LemmaReport> {
    let (core, _) = alpha.cyclic_reduce()?;
    let l_alpha = core.len();
    if l_alpha < 2 {
        return Err(Error::WordTooShort { len: l_alpha, min: 2 });
    }
    let overlap = axis_overlap(alpha, g)?;
    let n = overlap.length;
    let directions_agree = (n >= 1).then_some(overlap.orientation_agrees);
    let (bound, holds) = if n >= 1 && !overlap.orientation_agrees {
        // Integer-exact proof form 2n <= L - 2, equivalent to n < (L-1)/2.
        (OverlapBound::Part1, 2 * n <= l_alpha - 2)
    } else {
        (OverlapBound::Part2, n + 2 <= l_alpha)
    };
    Ok(LemmaReport {
        alpha: alpha.to_string(),
        g: g.to_string(),
        l_alpha,
        overlap_len: n,
        directions_agree,
        bound,
        holds,
    })
}

/// Exhaustive sweep over cyclically reduced alpha with 2 <= L <= max_alpha
/// and reduced g with |g| <= max_g.  Same-axis pairs are skipped (the bounds
/// are vacuous there).
pub fn sweep_lemma_bounds(max_alpha: usize, max_g: usize) -> Vec<LemmaReport> {
    let mut out = Vec::new();
    for alpha in cyclically_reduced_words(2, max_alpha) {
        for g in reduced_words_up_to(max_g) {
            match check_lemma_bounds(&alpha, &g) {
                Ok(report) => out.push(report),
                Err(Error::SameAxis) => {}
                Err(e) => unreachable!("sweep inputs are always valid: {e}"),
            }
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
    fn generator_axis_is_its_powers() {
        let verts = axis_vertices(&w("x"), 3).unwrap();
        let expect: Vec<Word> =
            ["XXX", "XX", "X", "", "x", "xx", "xxx"].iter().map(|s| w(s)).collect();
        assert_eq!(verts, expect);
    }

    #[test]
    fn conjugated_axis_passes_through_conjugator() {
        let verts = axis_vertices(&w("xyX"), 3).unwrap();
        assert!(verts.contains(&w("x")));
        assert!(!verts.contains(&Word::empty()));
    }

    #[test]
    fn cyclically_reduced_axis_passes_through_base() {
        let verts = axis_vertices(&w("xYxy"), 4).unwrap();
        assert!(verts.contains(&Word::empty()));
    }

    #[test]
    fn axis_path_is_a_path() {
        for s in ["xY", "xyX", "xxY", "yxYxy"] {
            let path = axis_path(&w(s), 5).unwrap();
            for i in 0..path.vertices.len() - 1 {
                let step = path.vertices[i].inverse().concat(&path.vertices[i + 1]);
                assert_eq!(step.len(), 1, "consecutive vertices differ by one letter");
                assert_eq!(step.letters()[0], path.letters[i]);
            }
            // no repeats
            let mut seen = std::collections::HashSet::new();
            for v in &path.vertices {
                assert!(seen.insert(v.clone()));
            }
        }
    }

    #[test]
    fn disagreeing_example() {
        // alpha = x y^{-1} x y translated by x^{-1}: length-1 overlap on the
        // edge between e and y^{-1}, traversed in opposite directions.
        let overlap = axis_overlap(&w("xYxy"), &w("X")).unwrap();
        assert_eq!(overlap.length, 1);
        assert!(!overlap.orientation_agrees);
        assert_eq!(overlap.overlap_word, w("y"));
    }

    #[test]
    fn agreeing_example() {
        let overlap = axis_overlap(&w("xyx"), &w("x")).unwrap();
        assert_eq!(overlap.length, 1);
        assert!(overlap.orientation_agrees);
        assert_eq!(overlap.overlap_word, w("x"));
    }

    #[test]
    fn same_axis_detection() {
        assert!(matches!(axis_overlap(&w("xy"), &w("xy")), Err(Error::SameAxis)));
        assert!(matches!(axis_overlap(&w("xyxy"), &w("xy")), Err(Error::SameAxis)));
        assert!(matches!(axis_overlap(&w("xy"), &Word::empty()), Err(Error::SameAxis)));
    }

    #[test]
    fn gap_words_share_no_boundary_letter() {
        // Wherever the axes meet, the two gap words can neither start nor end
        // with the same letter.
        for alpha in cyclically_reduced_words(2, 4) {
            for g in reduced_words_up_to(3) {
                let Ok(o) = axis_overlap(&alpha, &g) else { continue };
                if !o.touches {
                    continue;
                }
                let l = &o.gap_word_l;
                let m = &o.gap_word_m;
                if l.is_empty() || m.is_empty() {
                    continue;
                }
                assert_ne!(l.letters()[0], m.letters()[0], "alpha={alpha} g={g}");
                assert_ne!(
                    l.letters()[l.len() - 1],
                    m.letters()[m.len() - 1],
                    "alpha={alpha} g={g}"
                );
            }
        }
    }

    #[test]
    fn report_bounds_on_reference_instances() {
        let r1 = check_lemma_bounds(&w("xYxy"), &w("X")).unwrap();
        assert_eq!((r1.overlap_len, r1.bound, r1.holds), (1, OverlapBound::Part1, true));
        let r2 = check_lemma_bounds(&w("xyx"), &w("x")).unwrap();
        assert_eq!((r2.overlap_len, r2.bound, r2.holds), (1, OverlapBound::Part2, true));
        assert!(matches!(check_lemma_bounds(&w("x"), &w("y")), Err(Error::WordTooShort { .. })));
    }

    #[test]
    fn report_serialization_schema() {
        let r = check_lemma_bounds(&w("xYxy"), &w("X")).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        for key in ["alpha", "g", "L_alpha", "overlap_len", "directions_agree", "bound", "holds"] {
            assert!(json.get(key).is_some(), "missing key {key}");
        }
    }
}
