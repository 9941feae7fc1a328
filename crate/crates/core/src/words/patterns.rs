//! Sign classification and the subword patterns that decide how a gap word
//! can look.

use super::{Generator, Letter, Word};

/// All letters carry positive sign.
pub fn is_positive(w: &Word) -> bool {
    w.letters().iter().all(|l| l.sign() > 0)
}

/// Some generator occurs with both signs.
pub fn is_mixed_sign(w: &Word) -> bool {
    let mut seen = [false; 4];
    for l in w.letters() {
        seen[l.index()] = true;
    }
    (seen[0] && seen[1]) || (seen[2] && seen[3])
}

/// Shape classification of candidate gap words.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GapForm {
    /// y x^{d1} y ... y x^{dr} y or x^{d1} y ... y x^{dr}, all di >= 1,
    /// with single y's separating the x-runs.
    PositiveSpecial,
    /// A contiguous factor of the periodic word with period x y x^{-1} y^{-1}.
    CommutatorSubword,
    Other,
}

/// Decide whether a reduced word matches one of the two special positive
/// shapes, is a factor of a commutator power, or neither.
pub fn gap_form_classify(v: &Word) -> GapForm {
    if matches_positive_special(v.letters()) {
        GapForm::PositiveSpecial
    } else if is_commutator_factor(v.letters()) {
        GapForm::CommutatorSubword
    } else {
        GapForm::Other
    }
}

fn matches_positive_special(ls: &[Letter]) -> bool {
    if ls.is_empty() || ls.iter().any(|l| l.sign() < 0) {
        return false;
    }
    // Tokenize into maximal runs.
    let mut runs: Vec<(Generator, usize)> = Vec::new();
    for l in ls {
        match runs.last_mut() {
            Some((g, n)) if *g == l.generator() => *n += 1,
            _ => runs.push((l.generator(), 1)),
        }
    }
    let y_runs_single = runs.iter().filter(|(g, _)| *g == Generator::Y).all(|(_, n)| *n == 1);
    if !y_runs_single {
        return false;
    }
    let xs = runs.iter().filter(|(g, _)| *g == Generator::X).count();
    let ys = runs.len() - xs;
    let first = runs.first().map(|(g, _)| *g);
    let last = runs.last().map(|(g, _)| *g);
    // y (x^d y)^r: starts and ends with y, r >= 1.
    let form1 = first == Some(Generator::Y) && last == Some(Generator::Y) && xs >= 1 && ys == xs + 1;
    // x^{d1} (y x^{di})...: starts and ends with x, at least one separating y.
    let form2 = first == Some(Generator::X) && last == Some(Generator::X) && ys >= 1 && xs == ys + 1;
    form1 || form2
}

fn is_commutator_factor(ls: &[Letter]) -> bool {
    use super::{X_NEG, X_POS, Y_NEG, Y_POS};
    if ls.is_empty() {
        return true;
    }
    let period = [X_POS, Y_POS, X_NEG, Y_NEG];
    (0..4).any(|k| ls.iter().enumerate().all(|(i, &l)| l == period[(k + i) % 4]))
}

/// Forbidden subwords, reported up to elementary equivalence and inversion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ForbiddenSubword {
    /// a b a^{-1} b or a b a b^{-1} over distinct generators
    /// (the equivalence orbit of y x y^{-1} x and its inverse).
    YxYinvX,
    /// a b a^{-1} a^{-1} or a a b a^{-1} over distinct generators
    /// (the orbit of y x y^{-1} y^{-1} and its inverse).
    YxYinvYinv,
    /// a b^k a^{-1} with k > 1 over distinct generators.
    YxkYinv(usize),
    /// A square of an x-letter and a square of a y-letter both occur.
    X2AndY2,
}

/// Scan a reduced word for every forbidden pattern, returning the sorted,
/// deduplicated list of pattern kinds that occur.
pub fn forbidden_subword_scan(v: &Word) -> Vec<ForbiddenSubword> {
    let ls = v.letters();
    let n = ls.len();
    let mut hits = Vec::new();
    let distinct = |a: Letter, b: Letter| a.generator() != b.generator();

    for i in 0..n {
        // a b a^{-1} b  /  a b a b^{-1}
        if i + 4 <= n {
            let (a, b, c, d) = (ls[i], ls[i + 1], ls[i + 2], ls[i + 3]);
            if distinct(a, b)
                && ((c == a.inverse() && d == b) || (c == a && d == b.inverse()))
            {
                hits.push(ForbiddenSubword::YxYinvX);
            }
            // a b a^{-1} a^{-1}  /  a a b a^{-1}
            if (distinct(a, b) && c == a.inverse() && d == a.inverse())
                || (b == a && distinct(a, c) && d == a.inverse())
            {
                hits.push(ForbiddenSubword::YxYinvYinv);
            }
        }
        // a b^k a^{-1}, k > 1
        if let Some(k) = distinct_run_bracket(ls, i) {
            hits.push(ForbiddenSubword::YxkYinv(k));
        }
    }

    let has = |l: Letter| ls.windows(2).any(|w| w[0] == l && w[1] == l);
    use super::{X_NEG, X_POS, Y_NEG, Y_POS};
    if (has(X_POS) || has(X_NEG)) && (has(Y_POS) || has(Y_NEG)) {
        hits.push(ForbiddenSubword::X2AndY2);
    }

    hits.sort();
    hits.dedup();
    hits
}

/// If position i starts a block s t^k s^{-1} with k > 1 and t over the other
/// generator, return k.
fn distinct_run_bracket(ls: &[Letter], i: usize) -> Option<usize> {
    let s = *ls.get(i)?;
    let mut j = i + 1;
    let t = *ls.get(j)?;
    if t.generator() == s.generator() {
        return None;
    }
    while j < ls.len() && ls[j] == t {
        j += 1;
    }
    let k = j - (i + 1);
    if k > 1 && ls.get(j) == Some(&s.inverse()) {
        Some(k)
    } else {
        None
    }
}
