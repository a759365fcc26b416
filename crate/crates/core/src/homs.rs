//! Hom dimensions between string and quasi-simple band modules, counted by
//! admissible pairs of factor and sub windows.
//!
//! A window of a host word is a stretch of consecutive vertex positions.
//! It is a factor window when its flanks point out of it (inverse letter on
//! the left, direct on the right) and a sub window when they point into it.
//! Missing flanks at the ends of a string are allowed. Band hosts are read
//! as their two-sided periodic word, one window per start rotation and
//! length.

use std::fmt;

use crate::algebra::{GentlePresentation, Quiver};
use crate::strings::{Band, Letter, StringWord};

/// A string or a band, the latter standing for the quasi-simple band module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Host {
    String(StringWord),
    Band(Band),
}

impl Host {
    pub fn text(&self, q: &Quiver) -> String {
        match self {
            Host::String(w) => w.text(q),
            Host::Band(b) => format!("band {}", b.text(q)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WindowKind {
    Factor,
    Sub,
}

/// `host = w1 l e r w2`, with flanks `l`, `r` absent at string ends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub kind: WindowKind,
    pub start: usize,
    pub len: usize,
    pub left_flank: Option<Letter>,
    pub right_flank: Option<Letter>,
    pub middle: StringWord,
}

pub type FactorDecomposition = Decomposition;
pub type SubDecomposition = Decomposition;

impl fmt::Display for WindowKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WindowKind::Factor => "fac",
            WindowKind::Sub => "sub",
        })
    }
}

impl Decomposition {
    pub fn text(&self, q: &Quiver) -> String {
        let flank = |l: Option<Letter>| l.map_or("-".to_string(), |l| l.text(q));
        format!(
            "{} [{}] ({}) [{}]",
            self.kind,
            flank(self.left_flank),
            self.middle.label(q),
            flank(self.right_flank)
        )
    }
}

fn flanks_fit(kind: WindowKind, left: Option<Letter>, right: Option<Letter>) -> bool {
    // Factor: left flank inverse, right flank direct. Sub: the opposite.
    let want_left_inverse = kind == WindowKind::Factor;
    left.is_none_or(|l| l.inverse == want_left_inverse)
        && right.is_none_or(|r| r.inverse != want_left_inverse)
}

fn string_windows(p: &GentlePresentation, w: &StringWord, kind: WindowKind) -> Vec<Decomposition> {
    let letters = w.letters();
    let n = letters.len();
    if w.is_zero() {
        return vec![];
    }
    let left = |i: usize| if i == 0 { None } else { Some(letters[i - 1]) };
    let right = |j: usize| if j == n { None } else { Some(letters[j]) };
    let starts: Vec<usize> = (0..=n)
        .filter(|&i| flanks_fit(kind, left(i), None))
        .collect();
    let ends: Vec<usize> = (0..=n)
        .filter(|&j| flanks_fit(kind, None, right(j)))
        .collect();
    let mut out = Vec::new();
    for &i in &starts {
        for &j in ends.iter().filter(|&&j| j >= i) {
            out.push(Decomposition {
                kind,
                start: i,
                len: j - i,
                left_flank: left(i),
                right_flank: right(j),
                middle: if n == 0 { w.clone() } else { w.window(p, i, j) },
            });
        }
    }
    out
}

fn band_windows(
    p: &GentlePresentation,
    b: &Band,
    kind: WindowKind,
    max_len: usize,
) -> Vec<Decomposition> {
    let letters = b.letters();
    let m = letters.len();
    let at = |k: usize| letters[k % m];
    let mut out = Vec::new();
    for r in 0..m {
        let left = at(r + m - 1);
        for len in 0..=max_len {
            let right = at(r + len);
            if !flanks_fit(kind, Some(left), Some(right)) {
                continue;
            }
            let middle = if len == 0 {
                StringWord::trivial(left.target(p.quiver()), left.epsilon(p))
            } else {
                StringWord::Letters((r..r + len).map(at).collect())
            };
            out.push(Decomposition {
                kind,
                start: r,
                len,
                left_flank: Some(left),
                right_flank: Some(right),
                middle,
            });
        }
    }
    out
}

/// Factor windows. For a band host, `max_len` caps the window length.
pub fn factor_strings(
    p: &GentlePresentation,
    host: &Host,
    max_len: usize,
) -> Vec<FactorDecomposition> {
    match host {
        Host::String(w) => string_windows(p, w, WindowKind::Factor),
        Host::Band(b) => band_windows(p, b, WindowKind::Factor, max_len),
    }
}

/// Sub windows. For a band host, `max_len` caps the window length.
pub fn substrings(p: &GentlePresentation, host: &Host, max_len: usize) -> Vec<SubDecomposition> {
    match host {
        Host::String(w) => string_windows(p, w, WindowKind::Sub),
        Host::Band(b) => band_windows(p, b, WindowKind::Sub, max_len),
    }
}

/// `f = e` or `f = e^-1`; trivial windows match on their vertex.
pub fn windows_match(e: &StringWord, f: &StringWord) -> bool {
    match (e, f) {
        (StringWord::Trivial { vertex: x, .. }, StringWord::Trivial { vertex: y, .. }) => x == y,
        (StringWord::Letters(a), StringWord::Letters(_)) => {
            let b = f.letters();
            a == b || *a == f.inverse().letters()
        }
        _ => false,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissiblePair {
    pub factor: FactorDecomposition,
    pub sub: SubDecomposition,
    /// True when the sub window reads the factor window backwards.
    pub reversed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomCount {
    pub dim: usize,
    pub pairs: Vec<AdmissiblePair>,
    /// Set for two modules on the same band, where the count ignores the
    /// band parameter.
    pub experimental: bool,
}

/// `dim Hom(M(v), M(w))` by counting admissible pairs.
pub fn hom_dim(p: &GentlePresentation, v: &Host, w: &Host) -> HomCount {
    // no common window of two different periodic words is as long as the
    // sum of their periods, and string windows are bounded by the string
    let cap = match (v, w) {
        (Host::Band(a), Host::Band(b)) => a.len() + b.len(),
        (Host::String(s), _) | (_, Host::String(s)) => s.len(),
    };
    let fac = factor_strings(p, v, cap);
    let sub = substrings(p, w, cap);
    let mut pairs = Vec::new();
    for e in &fac {
        for f in &sub {
            if windows_match(&e.middle, &f.middle) {
                let reversed = e.middle.letters() != f.middle.letters();
                pairs.push(AdmissiblePair {
                    factor: e.clone(),
                    sub: f.clone(),
                    reversed,
                });
            }
        }
    }
    let experimental = matches!((v, w), (Host::Band(a), Host::Band(b)) if a == b);
    HomCount {
        dim: pairs.len(),
        pairs,
        experimental,
    }
}

/// Convenience wrapper for two strings.
pub fn hom_dim_strings(p: &GentlePresentation, v: &StringWord, w: &StringWord) -> usize {
    hom_dim(p, &Host::String(v.clone()), &Host::String(w.clone())).dim
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::strings::parse_string;

    fn s(p: &GentlePresentation, t: &str) -> Host {
        Host::String(parse_string(p, t).unwrap())
    }

    fn middles(p: &GentlePresentation, ds: &[Decomposition]) -> Vec<String> {
        ds.iter().map(|d| d.middle.label(p.quiver())).collect()
    }

    #[test]
    fn a2_windows() {
        let p = fixtures::a2();
        assert_eq!(
            middles(&p, &factor_strings(&p, &s(&p, "triv 1 +"), 0)),
            vec!["1"]
        );
        assert_eq!(
            middles(&p, &factor_strings(&p, &s(&p, "a"), 0)),
            vec!["1", "a"]
        );
        assert_eq!(middles(&p, &substrings(&p, &s(&p, "a"), 0)), vec!["a", "2"]);
        assert_eq!(
            middles(&p, &substrings(&p, &s(&p, "triv 2 +"), 0)),
            vec!["2"]
        );
    }

    #[test]
    fn a2_homs() {
        let p = fixtures::a2();
        assert_eq!(hom_dim(&p, &s(&p, "a"), &s(&p, "triv 1 +")).dim, 1);
        assert_eq!(hom_dim(&p, &s(&p, "triv 1 +"), &s(&p, "a")).dim, 0);
        assert_eq!(hom_dim(&p, &s(&p, "triv 2 +"), &s(&p, "a")).dim, 1);
        assert_eq!(hom_dim(&p, &s(&p, "triv 2 -"), &s(&p, "triv 2 +")).dim, 1);
    }

    #[test]
    fn fix_a_endomorphisms() {
        let p = fixtures::fix_a();
        let w = s(&p, "b- c d c- b");
        let h = hom_dim(&p, &w, &w);
        assert_eq!(h.dim, 2);
        let mids = h
            .pairs
            .iter()
            .map(|x| x.factor.middle.text(p.quiver()))
            .collect::<Vec<_>>();
        assert!(mids.contains(&"b- c d c- b".to_string()));
        assert!(mids.contains(&"b- c".to_string()));
    }

    #[test]
    fn kronecker_string_band() {
        let p = fixtures::kronecker();
        let band = Host::Band(crate::strings::detect_band(&p).unwrap());
        // the preprojective of dimension (1, 2) maps to each quasi-simple
        assert_eq!(hom_dim(&p, &s(&p, "b- a"), &band).dim, 1);
        assert_eq!(hom_dim(&p, &band, &s(&p, "b- a")).dim, 0);
        assert!(hom_dim(&p, &band, &band).experimental);
    }
}
