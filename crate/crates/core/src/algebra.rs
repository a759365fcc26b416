//! Quivers with length-two relations, the gentle axioms and sign functions.
//!
//! Paths are read left to right: the relation `(a, b)` stands for the path
//! `ab` with `t(a) = s(b)`. Vertex and arrow identifiers are opaque strings;
//! both are kept sorted so that index order is the canonical (lexicographic)
//! order used everywhere else in the crate.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate arrow `{0}`")]
    DuplicateArrow(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("relation `{0} {1}` is not composable: t({0}) != s({1})")]
    NonComposableRelation(String, String),
    #[error("path is not composable at position {0}")]
    NonComposablePath(usize),
    #[error("presentation is not gentle: {0}")]
    NotGentle(GentleReport),
    #[error("sign constraints are inconsistent at arrow `{0}`")]
    InconsistentSigns(String),
}

/// A sign `+1` / `-1`, used for the functions sigma and epsilon and for
/// trivial strings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl std::ops::Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub id: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_index: BTreeMap<String, usize>,
    arrow_index: BTreeMap<String, usize>,
}

impl Quiver {
    /// Builds a quiver from vertex ids and `(arrow, source, target)` triples.
    /// Loops and multiple arrows are allowed.
    pub fn new<V, A>(vertices: V, arrows: A) -> Result<Self, AlgebraError>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        A: IntoIterator<Item = (String, String, String)>,
    {
        let mut vs: Vec<String> = vertices.into_iter().map(Into::into).collect();
        vs.sort();
        for w in vs.windows(2) {
            if w[0] == w[1] {
                return Err(AlgebraError::DuplicateVertex(w[0].clone()));
            }
        }
        let vertex_index: BTreeMap<String, usize> =
            vs.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect();

        let mut raw: Vec<(String, String, String)> = arrows.into_iter().collect();
        raw.sort();
        let mut arrows = Vec::with_capacity(raw.len());
        let mut arrow_index = BTreeMap::new();
        for (id, s, t) in raw {
            let source = *vertex_index
                .get(&s)
                .ok_or_else(|| AlgebraError::UnknownVertex(s.clone()))?;
            let target = *vertex_index
                .get(&t)
                .ok_or_else(|| AlgebraError::UnknownVertex(t.clone()))?;
            if arrow_index.insert(id.clone(), arrows.len()).is_some() {
                return Err(AlgebraError::DuplicateArrow(id));
            }
            arrows.push(Arrow { id, source, target });
        }
        Ok(Quiver {
            vertices: vs,
            arrows,
            vertex_index,
            arrow_index,
        })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertex_index.get(id).copied()
    }

    pub fn arrow_index(&self, id: &str) -> Option<usize> {
        self.arrow_index.get(id).copied()
    }

    pub fn outgoing(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.source == v)
            .map(|(i, _)| i)
    }

    pub fn incoming(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.target == v)
            .map(|(i, _)| i)
    }
}

/// Which gentle axiom failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Axiom {
    G1,
    G2,
    G3,
    G4,
    /// Some oriented cycle avoids the relations, so `kQ/I` is infinite dimensional.
    Admissible,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::G1 => "G1",
            Axiom::G2 => "G2",
            Axiom::G3 => "G3",
            Axiom::G4 => "G4",
            Axiom::Admissible => "admissible",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub witnesses: Vec<String>,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}) {}: {}",
            self.axiom,
            self.detail,
            self.witnesses.join(" ")
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GentleReport {
    pub violations: Vec<Violation>,
}

impl GentleReport {
    pub fn is_gentle(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn failed_axioms(&self) -> BTreeSet<Axiom> {
        self.violations.iter().map(|v| v.axiom).collect()
    }
}

impl fmt::Display for GentleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_gentle() {
            return f.write_str("gentle");
        }
        let parts: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join("; "))
    }
}

/// Resolves relation pairs given by arrow id into index pairs, rejecting
/// unknown arrows and non-composable pairs.
pub fn resolve_relations<'a, I>(
    q: &Quiver,
    rels: I,
) -> Result<BTreeSet<(usize, usize)>, AlgebraError>
where
    I: IntoIterator<Item = (&'a str, &'a str)>,
{
    let mut out = BTreeSet::new();
    for (a, b) in rels {
        let ia = q
            .arrow_index(a)
            .ok_or_else(|| AlgebraError::UnknownArrow(a.to_string()))?;
        let ib = q
            .arrow_index(b)
            .ok_or_else(|| AlgebraError::UnknownArrow(b.to_string()))?;
        if q.arrow(ia).target != q.arrow(ib).source {
            return Err(AlgebraError::NonComposableRelation(
                a.to_string(),
                b.to_string(),
            ));
        }
        out.insert((ia, ib));
    }
    Ok(out)
}

/// Checks (G1)-(G4) plus finite dimensionality. Relations are index pairs and
/// must be composable.
pub fn check_gentle(
    q: &Quiver,
    rels: &BTreeSet<(usize, usize)>,
) -> Result<GentleReport, AlgebraError> {
    for &(a, b) in rels {
        if a >= q.arrow_count() {
            return Err(AlgebraError::UnknownArrow(a.to_string()));
        }
        if b >= q.arrow_count() {
            return Err(AlgebraError::UnknownArrow(b.to_string()));
        }
        if q.arrow(a).target != q.arrow(b).source {
            return Err(AlgebraError::NonComposableRelation(
                q.arrow(a).id.clone(),
                q.arrow(b).id.clone(),
            ));
        }
    }
    let name = |a: usize| q.arrow(a).id.clone();
    let mut violations = Vec::new();

    for v in 0..q.vertex_count() {
        let out: Vec<usize> = q.outgoing(v).collect();
        let inc: Vec<usize> = q.incoming(v).collect();
        if out.len() > 2 {
            violations.push(Violation {
                axiom: Axiom::G1,
                witnesses: out.iter().map(|&a| name(a)).collect(),
                detail: format!(
                    "vertex {} is the source of {} arrows",
                    q.vertex(v),
                    out.len()
                ),
            });
        }
        if inc.len() > 2 {
            violations.push(Violation {
                axiom: Axiom::G1,
                witnesses: inc.iter().map(|&a| name(a)).collect(),
                detail: format!(
                    "vertex {} is the target of {} arrows",
                    q.vertex(v),
                    inc.len()
                ),
            });
        }
    }

    for (a, arrow) in q.arrows().iter().enumerate() {
        let after: Vec<usize> = q.outgoing(arrow.target).collect();
        let before: Vec<usize> = q.incoming(arrow.source).collect();
        let free_after: Vec<usize> = after
            .iter()
            .copied()
            .filter(|&b| !rels.contains(&(a, b)))
            .collect();
        let free_before: Vec<usize> = before
            .iter()
            .copied()
            .filter(|&c| !rels.contains(&(c, a)))
            .collect();
        let rel_after: Vec<usize> = after
            .iter()
            .copied()
            .filter(|&b| rels.contains(&(a, b)))
            .collect();
        let rel_before: Vec<usize> = before
            .iter()
            .copied()
            .filter(|&c| rels.contains(&(c, a)))
            .collect();
        if free_after.len() > 1 {
            violations.push(Violation {
                axiom: Axiom::G2,
                witnesses: std::iter::once(name(a))
                    .chain(free_after.iter().map(|&b| name(b)))
                    .collect(),
                detail: format!("{} composes without relation with several arrows", arrow.id),
            });
        }
        if free_before.len() > 1 {
            violations.push(Violation {
                axiom: Axiom::G2,
                witnesses: std::iter::once(name(a))
                    .chain(free_before.iter().map(|&b| name(b)))
                    .collect(),
                detail: format!("several arrows compose without relation into {}", arrow.id),
            });
        }
        if rel_after.len() > 1 {
            violations.push(Violation {
                axiom: Axiom::G3,
                witnesses: std::iter::once(name(a))
                    .chain(rel_after.iter().map(|&b| name(b)))
                    .collect(),
                detail: format!("{} starts several relations", arrow.id),
            });
        }
        if rel_before.len() > 1 {
            violations.push(Violation {
                axiom: Axiom::G3,
                witnesses: std::iter::once(name(a))
                    .chain(rel_before.iter().map(|&b| name(b)))
                    .collect(),
                detail: format!("{} ends several relations", arrow.id),
            });
        }
    }

    if violations.is_empty() {
        if let Some(cycle) = relation_free_cycle(q, rels) {
            violations.push(Violation {
                axiom: Axiom::Admissible,
                witnesses: cycle.iter().map(|&a| name(a)).collect(),
                detail: "oriented cycle without relations".to_string(),
            });
        }
    }
    Ok(GentleReport { violations })
}

/// A cycle in the graph on arrows with an edge `a -> b` whenever `ab` is a
/// nonzero path, if one exists.
pub fn relation_free_cycle(q: &Quiver, rels: &BTreeSet<(usize, usize)>) -> Option<Vec<usize>> {
    let n = q.arrow_count();
    let succ: Vec<Vec<usize>> = (0..n)
        .map(|a| {
            q.outgoing(q.arrow(a).target)
                .filter(|&b| !rels.contains(&(a, b)))
                .collect()
        })
        .collect();
    find_cycle(n, &succ)
}

/// Iterative DFS cycle finder on a small directed graph given by successor
/// lists. Returns the node sequence of one directed cycle.
pub(crate) fn find_cycle(n: usize, succ: &[Vec<usize>]) -> Option<Vec<usize>> {
    // 0 = unvisited, 1 = on stack, 2 = done
    let mut state = vec![0u8; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        if state[root] != 0 {
            continue;
        }
        let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
        state[root] = 1;
        while let Some(&mut (node, ref mut next)) = stack.last_mut() {
            if *next < succ[node].len() {
                let child = succ[node][*next];
                *next += 1;
                match state[child] {
                    0 => {
                        state[child] = 1;
                        parent[child] = node;
                        stack.push((child, 0));
                    }
                    1 => {
                        let mut cycle = vec![node];
                        let mut cur = node;
                        while cur != child {
                            cur = parent[cur];
                            cycle.push(cur);
                        }
                        cycle.reverse();
                        return Some(cycle);
                    }
                    _ => {}
                }
            } else {
                state[node] = 2;
                stack.pop();
            }
        }
    }
    None
}

/// Assigns sigma and epsilon satisfying the three sign conditions.
///
/// Arrows are visited in id order; every constraint `x = -y` is merged into a
/// parity union-find and each free class is set to `+1`.
pub fn assign_signs(
    q: &Quiver,
    rels: &BTreeSet<(usize, usize)>,
) -> Result<(Vec<Sign>, Vec<Sign>), AlgebraError> {
    let report = check_gentle(q, rels)?;
    if !report.is_gentle() {
        return Err(AlgebraError::NotGentle(report));
    }
    let n = q.arrow_count();
    // variable 2a = sigma(a), 2a + 1 = epsilon(a)
    let mut uf = ParityUnionFind::new(2 * n);
    for a in 0..n {
        let arrow = q.arrow(a);
        for b in (a + 1)..n {
            if q.arrow(b).source == arrow.source && !uf.union_opposite(2 * a, 2 * b) {
                return Err(AlgebraError::InconsistentSigns(arrow.id.clone()));
            }
            if q.arrow(b).target == arrow.target && !uf.union_opposite(2 * a + 1, 2 * b + 1) {
                return Err(AlgebraError::InconsistentSigns(arrow.id.clone()));
            }
        }
        for b in q.outgoing(arrow.target) {
            if !rels.contains(&(a, b)) && !uf.union_opposite(2 * b, 2 * a + 1) {
                return Err(AlgebraError::InconsistentSigns(arrow.id.clone()));
            }
        }
    }
    let value = |uf: &mut ParityUnionFind, x: usize| {
        let (_, parity) = uf.find(x);
        if parity {
            Sign::Minus
        } else {
            Sign::Plus
        }
    };
    let sigma = (0..n).map(|a| value(&mut uf, 2 * a)).collect();
    let epsilon = (0..n).map(|a| value(&mut uf, 2 * a + 1)).collect();
    Ok((sigma, epsilon))
}

/// Re-verifies the three sign conditions directly.
pub fn signs_satisfy_conditions(
    q: &Quiver,
    rels: &BTreeSet<(usize, usize)>,
    sigma: &[Sign],
    epsilon: &[Sign],
) -> bool {
    let n = q.arrow_count();
    for a in 0..n {
        for b in 0..n {
            if a == b {
                continue;
            }
            if q.arrow(a).source == q.arrow(b).source && sigma[a] == sigma[b] {
                return false;
            }
            if q.arrow(a).target == q.arrow(b).target && epsilon[a] == epsilon[b] {
                return false;
            }
        }
        for b in q.outgoing(q.arrow(a).target) {
            if !rels.contains(&(a, b)) && sigma[b] != -epsilon[a] {
                return false;
            }
        }
    }
    true
}

struct ParityUnionFind {
    parent: Vec<usize>,
    parity: Vec<bool>,
}

impl ParityUnionFind {
    fn new(n: usize) -> Self {
        ParityUnionFind {
            parent: (0..n).collect(),
            parity: vec![false; n],
        }
    }

    /// Root of `x` and the parity of `x` relative to it.
    fn find(&mut self, x: usize) -> (usize, bool) {
        let p = self.parent[x];
        if p == x {
            return (x, false);
        }
        let (root, par) = self.find(p);
        self.parent[x] = root;
        self.parity[x] ^= par;
        (root, self.parity[x])
    }

    /// Records `x = -y`; false if this contradicts earlier constraints.
    fn union_opposite(&mut self, x: usize, y: usize) -> bool {
        let (rx, px) = self.find(x);
        let (ry, py) = self.find(y);
        if rx == ry {
            return px != py;
        }
        // attach the larger root under the smaller one so that lower
        // variables (earlier arrows) end up as representatives
        let (child, root) = if rx < ry { (ry, rx) } else { (rx, ry) };
        self.parent[child] = root;
        self.parity[child] = !(px ^ py);
        true
    }
}

/// A gentle bound quiver `kQ/I` with chosen sign functions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GentlePresentation {
    quiver: Quiver,
    relations: BTreeSet<(usize, usize)>,
    sigma: Vec<Sign>,
    epsilon: Vec<Sign>,
}

impl GentlePresentation {
    pub fn new(quiver: Quiver, relations: BTreeSet<(usize, usize)>) -> Result<Self, AlgebraError> {
        let (sigma, epsilon) = assign_signs(&quiver, &relations)?;
        Ok(GentlePresentation {
            quiver,
            relations,
            sigma,
            epsilon,
        })
    }

    /// Convenience constructor from ids.
    pub fn from_ids(
        vertices: &[&str],
        arrows: &[(&str, &str, &str)],
        relations: &[(&str, &str)],
    ) -> Result<Self, AlgebraError> {
        let q = Quiver::new(
            vertices.iter().map(|v| v.to_string()),
            arrows
                .iter()
                .map(|(a, s, t)| (a.to_string(), s.to_string(), t.to_string())),
        )?;
        let rels = resolve_relations(&q, relations.iter().copied())?;
        GentlePresentation::new(q, rels)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &BTreeSet<(usize, usize)> {
        &self.relations
    }

    pub fn is_relation(&self, a: usize, b: usize) -> bool {
        self.relations.contains(&(a, b))
    }

    pub fn sigma(&self, a: usize) -> Sign {
        self.sigma[a]
    }

    pub fn epsilon(&self, a: usize) -> Sign {
        self.epsilon[a]
    }

    pub fn sigmas(&self) -> &[Sign] {
        &self.sigma
    }

    pub fn epsilons(&self) -> &[Sign] {
        &self.epsilon
    }

    /// True iff some adjacent pair of the path lies in the relations.
    pub fn is_zero_path(&self, path: &[usize]) -> Result<bool, AlgebraError> {
        for (i, w) in path.windows(2).enumerate() {
            if self.quiver.arrow(w[0]).target != self.quiver.arrow(w[1]).source {
                return Err(AlgebraError::NonComposablePath(i + 1));
            }
        }
        Ok(path
            .windows(2)
            .any(|w| self.relations.contains(&(w[0], w[1]))))
    }

    /// Relations as id pairs in canonical order.
    pub fn relation_ids(&self) -> Vec<(String, String)> {
        self.relations
            .iter()
            .map(|&(a, b)| {
                (
                    self.quiver.arrow(a).id.clone(),
                    self.quiver.arrow(b).id.clone(),
                )
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fix_a() -> GentlePresentation {
        GentlePresentation::from_ids(
            &["1", "2", "3"],
            &[
                ("a", "1", "2"),
                ("b", "2", "1"),
                ("c", "2", "3"),
                ("d", "3", "3"),
            ],
            &[("a", "b"), ("b", "a"), ("d", "d")],
        )
        .unwrap()
    }

    #[test]
    fn fix_a_is_gentle() {
        let p = fix_a();
        assert!(check_gentle(p.quiver(), p.relations()).unwrap().is_gentle());
    }

    #[test]
    fn linear_a3_is_gentle() {
        let p = GentlePresentation::from_ids(
            &["1", "2", "3"],
            &[("a", "1", "2"), ("b", "2", "3")],
            &[],
        );
        assert!(p.is_ok());
    }

    #[test]
    fn three_outgoing_arrows_violate_g1() {
        let q = Quiver::new(
            ["1", "2", "3", "4"],
            [("a", "1", "2"), ("b", "1", "3"), ("c", "1", "4")]
                .map(|(a, s, t)| (a.to_string(), s.to_string(), t.to_string())),
        )
        .unwrap();
        let report = check_gentle(&q, &BTreeSet::new()).unwrap();
        assert_eq!(report.failed_axioms(), [Axiom::G1].into_iter().collect());
        assert_eq!(report.violations[0].witnesses, vec!["a", "b", "c"]);
    }

    #[test]
    fn g2_and_g3_violations_are_named() {
        // b and c both continue a without relation
        let q = Quiver::new(
            ["1", "2", "3", "4"],
            [("a", "1", "2"), ("b", "2", "3"), ("c", "2", "4")]
                .map(|(a, s, t)| (a.to_string(), s.to_string(), t.to_string())),
        )
        .unwrap();
        let report = check_gentle(&q, &BTreeSet::new()).unwrap();
        assert!(report.failed_axioms().contains(&Axiom::G2));
        let rels = resolve_relations(&q, [("a", "b"), ("a", "c")]).unwrap();
        let report = check_gentle(&q, &rels).unwrap();
        assert!(report.failed_axioms().contains(&Axiom::G3));
    }

    #[test]
    fn non_composable_relation_is_an_input_error() {
        let q = Quiver::new(
            ["1", "2"],
            [("a", "1", "2"), ("b", "1", "2")]
                .map(|(a, s, t)| (a.to_string(), s.to_string(), t.to_string())),
        )
        .unwrap();
        assert!(matches!(
            resolve_relations(&q, [("a", "b")]),
            Err(AlgebraError::NonComposableRelation(..))
        ));
    }

    #[test]
    fn loop_without_relation_is_not_admissible() {
        let q = Quiver::new(["1"], [("d".to_string(), "1".to_string(), "1".to_string())]).unwrap();
        let report = check_gentle(&q, &BTreeSet::new()).unwrap();
        assert_eq!(
            report.failed_axioms(),
            [Axiom::Admissible].into_iter().collect()
        );
    }

    #[test]
    fn fix_a_signs() {
        let p = fix_a();
        let ix = |s: &str| p.quiver().arrow_index(s).unwrap();
        let (a, b, c, d) = (ix("a"), ix("b"), ix("c"), ix("d"));
        assert_eq!(p.sigma(b), -p.sigma(c));
        assert_eq!(p.epsilon(c), -p.epsilon(d));
        assert_eq!(p.sigma(c), -p.epsilon(a));
        assert_eq!(p.sigma(d), -p.epsilon(c));
        assert!(signs_satisfy_conditions(
            p.quiver(),
            p.relations(),
            p.sigmas(),
            p.epsilons()
        ));
        // deterministic
        assert_eq!(fix_a().sigmas(), p.sigmas());
    }

    #[test]
    fn single_arrow_signs() {
        let p = GentlePresentation::from_ids(&["1", "2"], &[("a", "1", "2")], &[]).unwrap();
        assert!(signs_satisfy_conditions(
            p.quiver(),
            p.relations(),
            p.sigmas(),
            p.epsilons()
        ));
    }

    #[test]
    fn non_gentle_input_is_rejected_by_assign_signs() {
        let q = Quiver::new(
            ["1", "2", "3", "4"],
            [("a", "1", "2"), ("b", "1", "3"), ("c", "1", "4")]
                .map(|(a, s, t)| (a.to_string(), s.to_string(), t.to_string())),
        )
        .unwrap();
        assert!(matches!(
            assign_signs(&q, &BTreeSet::new()),
            Err(AlgebraError::NotGentle(_))
        ));
    }

    #[test]
    fn zero_paths() {
        let p = fix_a();
        let ix = |s: &str| p.quiver().arrow_index(s).unwrap();
        assert!(p.is_zero_path(&[ix("a"), ix("b")]).unwrap());
        assert!(!p.is_zero_path(&[ix("c"), ix("d")]).unwrap());
        assert!(!p.is_zero_path(&[]).unwrap());
        assert!(matches!(p.is_zero_path(&[ix("a"), ix("c")]), Ok(false)));
        assert!(matches!(
            p.is_zero_path(&[ix("c"), ix("a")]),
            Err(AlgebraError::NonComposablePath(1))
        ));
    }
}
