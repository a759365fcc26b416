//! Strings and bands over a gentle presentation.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::algebra::{find_cycle, GentlePresentation, Quiver, Sign};

/// An arrow or its formal inverse. The derived order (arrow index, then
/// direct before inverse) is the canonical letter order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub arrow: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn direct(arrow: usize) -> Self {
        Letter {
            arrow,
            inverse: false,
        }
    }

    pub fn inverse(arrow: usize) -> Self {
        Letter {
            arrow,
            inverse: true,
        }
    }

    pub fn inv(self) -> Self {
        Letter {
            arrow: self.arrow,
            inverse: !self.inverse,
        }
    }

    pub fn source(self, q: &Quiver) -> usize {
        let a = q.arrow(self.arrow);
        if self.inverse {
            a.target
        } else {
            a.source
        }
    }

    pub fn target(self, q: &Quiver) -> usize {
        let a = q.arrow(self.arrow);
        if self.inverse {
            a.source
        } else {
            a.target
        }
    }

    pub fn sigma(self, p: &GentlePresentation) -> Sign {
        if self.inverse {
            p.epsilon(self.arrow)
        } else {
            p.sigma(self.arrow)
        }
    }

    pub fn epsilon(self, p: &GentlePresentation) -> Sign {
        if self.inverse {
            p.sigma(self.arrow)
        } else {
            p.epsilon(self.arrow)
        }
    }

    pub fn text(self, q: &Quiver) -> String {
        let id = &q.arrow(self.arrow).id;
        if self.inverse {
            format!("{id}-")
        } else {
            id.clone()
        }
    }
}

/// Why a word fails to be a string.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Defect {
    NonComposable,
    NotReduced,
    Relation,
}

impl fmt::Display for Defect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Defect::NonComposable => "non-composable",
            Defect::NotReduced => "not reduced",
            Defect::Relation => "relation",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StringError {
    #[error("invalid string: {defect} at position {position}")]
    Invalid { position: usize, defect: Defect },
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("cannot parse string literal `{0}`")]
    Parse(String),
    #[error("composition is undefined")]
    Undefined,
    #[error("the zero string is not allowed here")]
    ZeroString,
    #[error("the algebra has a band; a length bound is required")]
    BoundRequired,
    #[error("not a band: {0}")]
    NotBand(String),
}

/// A string: zero, trivial, or a nonempty reduced relation-avoiding walk.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum StringWord {
    Zero,
    Trivial { vertex: usize, sign: Sign },
    Letters(Vec<Letter>),
}

/// Checks whether `l1 l2` is a string of length two.
pub fn pair_defect(p: &GentlePresentation, l1: Letter, l2: Letter) -> Option<Defect> {
    let q = p.quiver();
    if l1.target(q) != l2.source(q) {
        return Some(Defect::NonComposable);
    }
    if l1.arrow == l2.arrow && l1.inverse != l2.inverse {
        return Some(Defect::NotReduced);
    }
    match (l1.inverse, l2.inverse) {
        (false, false) if p.is_relation(l1.arrow, l2.arrow) => Some(Defect::Relation),
        (true, true) if p.is_relation(l2.arrow, l1.arrow) => Some(Defect::Relation),
        _ => None,
    }
}

pub fn pair_ok(p: &GentlePresentation, l1: Letter, l2: Letter) -> bool {
    pair_defect(p, l1, l2).is_none()
}

/// Validates a letter sequence; an empty sequence is the zero string.
pub fn validate_string(
    p: &GentlePresentation,
    letters: &[Letter],
) -> Result<StringWord, StringError> {
    if letters.is_empty() {
        return Ok(StringWord::Zero);
    }
    for (i, w) in letters.windows(2).enumerate() {
        if let Some(defect) = pair_defect(p, w[0], w[1]) {
            return Err(StringError::Invalid {
                position: i + 1,
                defect,
            });
        }
    }
    Ok(StringWord::Letters(letters.to_vec()))
}

impl StringWord {
    pub fn trivial(vertex: usize, sign: Sign) -> Self {
        StringWord::Trivial { vertex, sign }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, StringWord::Zero)
    }

    /// Number of letters; trivial and zero strings have length 0.
    pub fn len(&self) -> usize {
        match self {
            StringWord::Letters(l) => l.len(),
            _ => 0,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn letters(&self) -> &[Letter] {
        match self {
            StringWord::Letters(l) => l,
            _ => &[],
        }
    }

    pub fn inverse(&self) -> StringWord {
        match self {
            StringWord::Zero => StringWord::Zero,
            StringWord::Trivial { vertex, sign } => StringWord::Trivial {
                vertex: *vertex,
                sign: -*sign,
            },
            StringWord::Letters(l) => {
                StringWord::Letters(l.iter().rev().map(|x| x.inv()).collect())
            }
        }
    }

    pub fn source(&self, q: &Quiver) -> Option<usize> {
        match self {
            StringWord::Zero => None,
            StringWord::Trivial { vertex, .. } => Some(*vertex),
            StringWord::Letters(l) => Some(l[0].source(q)),
        }
    }

    pub fn target(&self, q: &Quiver) -> Option<usize> {
        match self {
            StringWord::Zero => None,
            StringWord::Trivial { vertex, .. } => Some(*vertex),
            StringWord::Letters(l) => Some(l[l.len() - 1].target(q)),
        }
    }

    pub fn sigma(&self, p: &GentlePresentation) -> Option<Sign> {
        match self {
            StringWord::Zero => None,
            StringWord::Trivial { sign, .. } => Some(-*sign),
            StringWord::Letters(l) => Some(l[0].sigma(p)),
        }
    }

    pub fn epsilon(&self, p: &GentlePresentation) -> Option<Sign> {
        match self {
            StringWord::Zero => None,
            StringWord::Trivial { sign, .. } => Some(*sign),
            StringWord::Letters(l) => Some(l[l.len() - 1].epsilon(p)),
        }
    }

    pub fn is_direct(&self) -> bool {
        match self {
            StringWord::Zero => false,
            StringWord::Trivial { .. } => true,
            StringWord::Letters(l) => l.iter().all(|x| !x.inverse),
        }
    }

    pub fn is_inverse(&self) -> bool {
        match self {
            StringWord::Zero => false,
            StringWord::Trivial { .. } => true,
            StringWord::Letters(l) => l.iter().all(|x| x.inverse),
        }
    }

    /// Vertex visited at each position 0..=len.
    pub fn vertices(&self, q: &Quiver) -> Vec<usize> {
        match self {
            StringWord::Zero => vec![],
            StringWord::Trivial { vertex, .. } => vec![*vertex],
            StringWord::Letters(l) => {
                let mut out = vec![l[0].source(q)];
                out.extend(l.iter().map(|x| x.target(q)));
                out
            }
        }
    }

    /// Visit count per vertex: the dimension vector of `M(w)`.
    pub fn dimension_vector(&self, q: &Quiver) -> Vec<usize> {
        let mut dims = vec![0; q.vertex_count()];
        for v in self.vertices(q) {
            dims[v] += 1;
        }
        dims
    }

    /// The representative of `{w, w^-1}` chosen once and for all.
    pub fn canonical(&self) -> StringWord {
        match self {
            StringWord::Zero => StringWord::Zero,
            StringWord::Trivial { vertex, .. } => StringWord::Trivial {
                vertex: *vertex,
                sign: Sign::Plus,
            },
            StringWord::Letters(l) => {
                let inv: Vec<Letter> = l.iter().rev().map(|x| x.inv()).collect();
                if inv < *l {
                    StringWord::Letters(inv)
                } else {
                    StringWord::Letters(l.clone())
                }
            }
        }
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonical()
    }

    /// The substring on vertex positions `i..=j`. A trivial window receives
    /// the sign that makes the prefix compose with it.
    pub fn window(&self, p: &GentlePresentation, i: usize, j: usize) -> StringWord {
        match self {
            StringWord::Letters(l) if i < j => StringWord::Letters(l[i..j].to_vec()),
            StringWord::Letters(l) => {
                let q = p.quiver();
                if i == 0 {
                    StringWord::Trivial {
                        vertex: l[0].source(q),
                        sign: -l[0].sigma(p),
                    }
                } else {
                    StringWord::Trivial {
                        vertex: l[i - 1].target(q),
                        sign: l[i - 1].epsilon(p),
                    }
                }
            }
            other => other.clone(),
        }
    }

    pub fn text(&self, q: &Quiver) -> String {
        match self {
            StringWord::Zero => "zero".to_string(),
            StringWord::Trivial { vertex, sign } => format!("triv {} {}", q.vertex(*vertex), sign),
            StringWord::Letters(l) => l.iter().map(|x| x.text(q)).collect::<Vec<_>>().join(" "),
        }
    }

    /// Short label: the vertex id for trivial strings, letters otherwise.
    pub fn label(&self, q: &Quiver) -> String {
        match self {
            StringWord::Trivial { vertex, .. } => q.vertex(*vertex).to_string(),
            other => other.text(q),
        }
    }
}

impl PartialOrd for StringWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Shorter strings first; ties broken by letters, trivial strings by vertex.
impl Ord for StringWord {
    fn cmp(&self, other: &Self) -> Ordering {
        fn rank(w: &StringWord) -> u8 {
            match w {
                StringWord::Zero => 0,
                StringWord::Trivial { .. } => 1,
                StringWord::Letters(_) => 2,
            }
        }
        match (self, other) {
            (
                StringWord::Trivial { vertex: a, sign: s },
                StringWord::Trivial { vertex: b, sign: t },
            ) => (a, s).cmp(&(b, t)),
            (StringWord::Letters(a), StringWord::Letters(b)) => {
                a.len().cmp(&b.len()).then_with(|| a.cmp(b))
            }
            _ => rank(self).cmp(&rank(other)),
        }
    }
}

/// `v w` under the sign rule for trivial strings.
pub fn compose(
    p: &GentlePresentation,
    v: &StringWord,
    w: &StringWord,
) -> Result<StringWord, StringError> {
    let q = p.quiver();
    if v.is_zero() || w.is_zero() {
        return Err(StringError::ZeroString);
    }
    if v.target(q) != w.source(q) || v.epsilon(p) != w.sigma(p).map(std::ops::Neg::neg) {
        return Err(StringError::Undefined);
    }
    match (v, w) {
        (StringWord::Letters(a), StringWord::Letters(b)) => {
            if !pair_ok(p, a[a.len() - 1], b[0]) {
                return Err(StringError::Undefined);
            }
            let mut out = a.clone();
            out.extend_from_slice(b);
            Ok(StringWord::Letters(out))
        }
        (StringWord::Trivial { .. }, _) => Ok(w.clone()),
        (_, StringWord::Trivial { .. }) => Ok(v.clone()),
        _ => unreachable!("zero handled above"),
    }
}

/// Parses `zero`, `triv <v> <+|->` or space-separated letters (`a`, `b-`)
/// into a validated string.
pub fn parse_string(p: &GentlePresentation, text: &str) -> Result<StringWord, StringError> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    match tokens.as_slice() {
        [] => Err(StringError::Parse(text.to_string())),
        ["zero"] => Ok(StringWord::Zero),
        ["triv", v, s] => {
            let vertex = p
                .quiver()
                .vertex_index(v)
                .ok_or_else(|| StringError::UnknownVertex(v.to_string()))?;
            let sign = match *s {
                "+" => Sign::Plus,
                "-" => Sign::Minus,
                _ => return Err(StringError::Parse(text.to_string())),
            };
            Ok(StringWord::Trivial { vertex, sign })
        }
        ["triv", ..] => Err(StringError::Parse(text.to_string())),
        _ => {
            let letters = parse_letters(p.quiver(), &tokens)?;
            validate_string(p, &letters)
        }
    }
}

pub fn parse_letters(q: &Quiver, tokens: &[&str]) -> Result<Vec<Letter>, StringError> {
    tokens
        .iter()
        .map(|tok| {
            let (id, inverse) = match tok.strip_suffix('-') {
                Some(id) => (id, true),
                None => (*tok, false),
            };
            let arrow = q
                .arrow_index(id)
                .ok_or_else(|| StringError::UnknownArrow(id.to_string()))?;
            Ok(Letter { arrow, inverse })
        })
        .collect()
}

/// A primitive cyclic string, stored as its least rotation over both
/// orientations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Band {
    letters: Vec<Letter>,
}

impl Band {
    /// Validates a cyclic word and returns it in canonical form.
    pub fn new(p: &GentlePresentation, letters: &[Letter]) -> Result<Self, StringError> {
        let n = letters.len();
        if n == 0 {
            return Err(StringError::NotBand("empty word".into()));
        }
        for i in 0..n {
            if let Some(d) = pair_defect(p, letters[i], letters[(i + 1) % n]) {
                return Err(StringError::NotBand(format!(
                    "{d} at cyclic position {}",
                    i + 1
                )));
            }
        }
        if (1..n).any(|k| n.is_multiple_of(k) && (0..n).all(|i| letters[i] == letters[i % k])) {
            return Err(StringError::NotBand("proper power".into()));
        }
        if letters.iter().all(|l| l.inverse) || letters.iter().all(|l| !l.inverse) {
            return Err(StringError::NotBand("oriented cycle".into()));
        }
        Ok(Band {
            letters: canonical_rotation(letters),
        })
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

    /// The `n`-th power as a linear word.
    pub fn power(&self, n: usize) -> Vec<Letter> {
        self.letters.repeat(n)
    }

    pub fn text(&self, q: &Quiver) -> String {
        self.letters
            .iter()
            .map(|x| x.text(q))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn dimension_vector(&self, q: &Quiver) -> Vec<usize> {
        let mut dims = vec![0; q.vertex_count()];
        for l in &self.letters {
            dims[l.source(q)] += 1;
        }
        dims
    }
}

fn canonical_rotation(letters: &[Letter]) -> Vec<Letter> {
    let inv: Vec<Letter> = letters.iter().rev().map(|x| x.inv()).collect();
    let n = letters.len();
    let mut best: Option<Vec<Letter>> = None;
    for word in [letters, &inv[..]] {
        for r in 0..n {
            let rot: Vec<Letter> = word[r..].iter().chain(&word[..r]).copied().collect();
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap_or_default()
}

/// Parameters of a band module `M(b, n, J_n(lambda))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BandModuleSpec {
    pub band: Band,
    pub n: usize,
    pub lambda: u64,
}

impl BandModuleSpec {
    pub fn new(band: Band, n: usize, lambda: u64) -> Result<Self, StringError> {
        if n == 0 {
            return Err(StringError::NotBand("multiplicity must be positive".into()));
        }
        if lambda == 0 {
            return Err(StringError::NotBand("parameter must be nonzero".into()));
        }
        Ok(BandModuleSpec { band, n, lambda })
    }
}

fn all_letters(q: &Quiver) -> Vec<Letter> {
    (0..q.arrow_count())
        .flat_map(|a| [Letter::direct(a), Letter::inverse(a)])
        .collect()
}

/// Finds a band if one exists, via a cycle in the letter-successor graph.
pub fn detect_band(p: &GentlePresentation) -> Option<Band> {
    let letters = all_letters(p.quiver());
    let succ: Vec<Vec<usize>> = letters
        .iter()
        .map(|&l1| {
            letters
                .iter()
                .enumerate()
                .filter(|&(_, &l2)| pair_ok(p, l1, l2))
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    let cycle = find_cycle(letters.len(), &succ)?;
    let word: Vec<Letter> = cycle.iter().map(|&i| letters[i]).collect();
    // a simple cycle repeats no letter, so it is primitive
    Band::new(p, &word).ok()
}

/// All strings up to inversion, including the trivial ones, sorted.
/// `max_len` caps the number of letters and is mandatory when a band exists.
pub fn enumerate_strings(
    p: &GentlePresentation,
    max_len: Option<usize>,
) -> Result<Vec<StringWord>, StringError> {
    if max_len.is_none() && detect_band(p).is_some() {
        return Err(StringError::BoundRequired);
    }
    let bound = max_len.unwrap_or(usize::MAX);
    let q = p.quiver();
    let mut out: BTreeSet<StringWord> = (0..q.vertex_count())
        .map(|v| StringWord::trivial(v, Sign::Plus))
        .collect();
    let letters = all_letters(q);
    let mut stack: Vec<Vec<Letter>> = if bound == 0 {
        vec![]
    } else {
        letters.iter().map(|&l| vec![l]).collect()
    };
    while let Some(word) = stack.pop() {
        if word.len() < bound {
            let last = word[word.len() - 1];
            for &l in &letters {
                if pair_ok(p, last, l) {
                    let mut next = word.clone();
                    next.push(l);
                    stack.push(next);
                }
            }
        }
        out.insert(StringWord::Letters(word).canonical());
    }
    Ok(out.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn fix_a_long_string_is_canonical() {
        let p = fixtures::fix_a();
        let w = parse_string(&p, "b- c d c- b").unwrap();
        assert_eq!(w.inverse().text(p.quiver()), "b- c d- c- b");
        assert_eq!(w.canonical(), w);
        assert_eq!(w.inverse().canonical(), w);
    }

    #[test]
    fn rejections_carry_position_and_reason() {
        let p = fixtures::fix_a();
        assert_eq!(
            parse_string(&p, "a b"),
            Err(StringError::Invalid {
                position: 1,
                defect: Defect::Relation
            })
        );
        assert_eq!(
            parse_string(&p, "c c-"),
            Err(StringError::Invalid {
                position: 1,
                defect: Defect::NotReduced
            })
        );
        assert_eq!(
            parse_string(&p, "c d d"),
            Err(StringError::Invalid {
                position: 2,
                defect: Defect::Relation
            })
        );
        assert_eq!(
            parse_string(&p, "c a"),
            Err(StringError::Invalid {
                position: 1,
                defect: Defect::NonComposable
            })
        );
    }

    #[test]
    fn composition() {
        let p = fixtures::fix_a();
        let c = parse_string(&p, "c").unwrap();
        let d = parse_string(&p, "d").unwrap();
        assert_eq!(compose(&p, &c, &d).unwrap().text(p.quiver()), "c d");
        let a = parse_string(&p, "a").unwrap();
        let b = parse_string(&p, "b").unwrap();
        assert_eq!(compose(&p, &a, &b), Err(StringError::Undefined));
        let id = StringWord::trivial(c.target(p.quiver()).unwrap(), c.epsilon(&p).unwrap());
        assert_eq!(compose(&p, &c, &id).unwrap(), c);
        assert_eq!(compose(&p, &c, &id.inverse()), Err(StringError::Undefined));
    }

    #[test]
    fn trivial_strings_share_a_class() {
        let a = StringWord::trivial(0, Sign::Plus);
        let b = StringWord::trivial(0, Sign::Minus);
        assert_eq!(a.canonical(), b.canonical());
        assert_eq!(a.inverse(), b);
    }

    #[test]
    fn a2_strings() {
        let p = fixtures::a2();
        let all = enumerate_strings(&p, None).unwrap();
        let labels: Vec<String> = all.iter().map(|w| w.label(p.quiver())).collect();
        assert_eq!(labels, vec!["1", "2", "a"]);
    }

    #[test]
    fn loop_algebra_strings() {
        let p = fixtures::loop_algebra();
        let all = enumerate_strings(&p, None).unwrap();
        let labels: Vec<String> = all.iter().map(|w| w.label(p.quiver())).collect();
        assert_eq!(labels, vec!["v", "d"]);
        assert!(detect_band(&p).is_none());
    }

    #[test]
    fn kronecker_band() {
        let p = fixtures::kronecker();
        let band = detect_band(&p).unwrap();
        assert_eq!(band.text(p.quiver()), "a b-");
        assert_eq!(enumerate_strings(&p, None), Err(StringError::BoundRequired));
        assert!(enumerate_strings(&p, Some(3)).unwrap().len() > 3);
    }

    #[test]
    fn band_validation() {
        let p = fixtures::kronecker();
        let q = p.quiver();
        let b = parse_letters(q, &["b-", "a"]).unwrap();
        assert_eq!(Band::new(&p, &b).unwrap().text(q), "a b-");
        let sq = parse_letters(q, &["a", "b-", "a", "b-"]).unwrap();
        assert!(Band::new(&p, &sq).is_err());
        let bad = parse_letters(q, &["a", "a-"]).unwrap();
        assert!(Band::new(&p, &bad).is_err());
    }

    #[test]
    fn windows_of_strings_are_strings() {
        let p = fixtures::fix_a();
        let w = parse_string(&p, "b- c d c- b").unwrap();
        for i in 0..=w.len() {
            for j in i..=w.len() {
                let win = w.window(&p, i, j);
                assert!(validate_string(&p, win.letters()).is_ok());
            }
        }
    }
}
