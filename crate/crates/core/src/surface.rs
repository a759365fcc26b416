//! Marked surfaces with partial triangulations, as combinatorial maps.
//!
//! Each marked boundary lists its points with the surface on the right, so an
//! outer boundary is listed clockwise. At a point `p` the items around `p`,
//! in clockwise order through the surface, are: the boundary segment to
//! `next(p)`, the fan slots, the boundary segment from `prev(p)`. Corner
//! `(p, i)` is the sector between item `i` and item `i + 1`.
//!
//! Tiles are the faces of this map. A tile walk leaves each corner along the
//! later of its two items, so tiles are walked counterclockwise and boundary
//! segments are traversed from `p` to `prev(p)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::algebra::{resolve_relations, AlgebraError, GentlePresentation, Quiver};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SurfaceError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("duplicate identifier `{0}`")]
    DuplicateId(String),
    #[error("unknown marked point `{0}`")]
    UnknownPoint(String),
    #[error("unknown arc `{0}`")]
    UnknownArc(String),
    #[error("fan at `{point}` is wrong: {msg}")]
    BadFan { point: String, msg: String },
    #[error("the surface is not connected")]
    Disconnected,
    #[error("unmarked boundary `{0}` has no tile bounded exactly by its arcs")]
    UnplacedUnmarked(String),
    #[error("tile {walk} cuts out a monogon or a digon")]
    Degenerate { walk: String },
    #[error("tile {walk} contains an unmarked boundary but has {sides} sides")]
    CrowdedTile { walk: String, sides: usize },
    #[error("Euler characteristic {0} gives no valid genus")]
    BadEuler(i64),
    #[error("a disc needs at least four marked points, found {0}")]
    SmallDisc(usize),
    #[error("no marked boundary")]
    NoMarkedBoundary,
    #[error("tiling algebra: {0}")]
    Algebra(#[from] AlgebraError),
}

/// Boundary component as declared in a tiling file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundarySpec {
    Marked { id: String, points: Vec<String> },
    Unmarked { id: String, inside: Vec<String> },
}

/// A tiling as written in its description file.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TilingSpec {
    pub boundaries: Vec<BoundarySpec>,
    /// `(id, first endpoint, second endpoint)`.
    pub arcs: Vec<(String, String, String)>,
    /// Clockwise arc ends per point, ends numbered 1 and 2.
    pub fans: BTreeMap<String, Vec<(String, u8)>>,
}

impl TilingSpec {
    pub fn parse(text: &str) -> Result<Self, SurfaceError> {
        let mut spec = TilingSpec::default();
        let mut started = false;
        let mut ended = false;
        for (n, raw) in text.lines().enumerate() {
            let line_no = n + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| SurfaceError::Parse {
                line: line_no,
                msg: msg.to_string(),
            };
            if ended {
                return Err(err("content after `end`"));
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            if !started {
                if toks != ["tiling"] {
                    return Err(err("expected `tiling`"));
                }
                started = true;
                continue;
            }
            match toks.as_slice() {
                ["end"] => ended = true,
                ["boundary", id, "marked", pts @ ..] if !pts.is_empty() => {
                    spec.boundaries.push(BoundarySpec::Marked {
                        id: id.to_string(),
                        points: pts.iter().map(|s| s.to_string()).collect(),
                    })
                }
                ["boundary", id, "unmarked", "inside", arcs @ ..]
                    if (1..=2).contains(&arcs.len()) =>
                {
                    spec.boundaries.push(BoundarySpec::Unmarked {
                        id: id.to_string(),
                        inside: arcs.iter().map(|s| s.to_string()).collect(),
                    })
                }
                ["arc", id, p, q] => spec
                    .arcs
                    .push((id.to_string(), p.to_string(), q.to_string())),
                ["fan", p, ":", slots @ ..] => {
                    let mut fan = Vec::new();
                    for s in slots {
                        let (arc, end) = s
                            .rsplit_once('.')
                            .ok_or_else(|| err("fan slot must be `<arc>.<1|2>`"))?;
                        let end = match end {
                            "1" => 1,
                            "2" => 2,
                            _ => return Err(err("fan slot end must be 1 or 2")),
                        };
                        fan.push((arc.to_string(), end));
                    }
                    if spec.fans.insert(p.to_string(), fan).is_some() {
                        return Err(err("second fan line for the same point"));
                    }
                }
                _ => return Err(err("unrecognised line")),
            }
        }
        if !started {
            return Err(SurfaceError::Parse {
                line: 0,
                msg: "empty input".into(),
            });
        }
        if !ended {
            return Err(SurfaceError::Parse {
                line: text.lines().count(),
                msg: "missing `end`".into(),
            });
        }
        Ok(spec)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::from("tiling\n");
        for b in &self.boundaries {
            match b {
                BoundarySpec::Marked { id, points } => {
                    out += &format!("boundary {id} marked {}\n", points.join(" "))
                }
                BoundarySpec::Unmarked { id, inside } => {
                    out += &format!("boundary {id} unmarked inside {}\n", inside.join(" "))
                }
            }
        }
        for (id, p, q) in &self.arcs {
            out += &format!("arc {id} {p} {q}\n");
        }
        for (p, fan) in &self.fans {
            let slots: Vec<String> = fan.iter().map(|(a, e)| format!("{a}.{e}")).collect();
            out += &format!("fan {p} : {}\n", slots.join(" "));
        }
        out += "end\n";
        out
    }
}

/// An arc end at a marked point; `end` is 0 or 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slot {
    pub arc: usize,
    pub end: usize,
}

/// Something incident to a marked point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Item {
    /// Boundary segment towards `next(p)`.
    Next,
    Slot(Slot),
    /// Boundary segment from `prev(p)`.
    Prev,
}

/// The sector at `point` between item `index` and item `index + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Corner {
    pub point: usize,
    pub index: usize,
}

/// A side of a tile, oriented along the counterclockwise walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    /// Arc side walked away from end `from_end`.
    Arc { arc: usize, from_end: usize },
    /// Boundary segment walked from `from` to `prev(from)`.
    Segment { from: usize },
}

impl Side {
    pub fn arc(self) -> Option<usize> {
        match self {
            Side::Arc { arc, .. } => Some(arc),
            Side::Segment { .. } => None,
        }
    }

    /// The same arc walked the other way, i.e. the side facing the other tile.
    pub fn opposite(self) -> Option<Side> {
        match self {
            Side::Arc { arc, from_end } => Some(Side::Arc {
                arc,
                from_end: 1 - from_end,
            }),
            Side::Segment { .. } => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TileKind {
    Polygon(usize),
    TypeI,
    TypeII,
}

impl fmt::Display for TileKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TileKind::Polygon(m) => write!(f, "{m}-gon"),
            TileKind::TypeI => f.write_str("type I"),
            TileKind::TypeII => f.write_str("type II"),
        }
    }
}

/// A face of the map. Side `k` runs from corner `k` to corner `k + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tile {
    pub corners: Vec<Corner>,
    pub sides: Vec<Side>,
    pub kind: TileKind,
    pub unmarked: Option<String>,
}

impl Tile {
    pub fn len(&self) -> usize {
        self.sides.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sides.is_empty()
    }

    pub fn side_index(&self, side: Side) -> Option<usize> {
        self.sides.iter().position(|&s| s == side)
    }

    pub fn corner_index(&self, c: Corner) -> Option<usize> {
        self.corners.iter().position(|&x| x == c)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcData {
    pub id: String,
    pub ends: [usize; 2],
}

/// A validated tiling with its derived tiles.
#[derive(Debug, Clone)]
pub struct Tiling {
    spec: TilingSpec,
    points: Vec<String>,
    arcs: Vec<ArcData>,
    fans: Vec<Vec<Slot>>,
    next: Vec<usize>,
    prev: Vec<usize>,
    tiles: Vec<Tile>,
    side_tile: BTreeMap<Side, (usize, usize)>,
    corner_tile: BTreeMap<Corner, (usize, usize)>,
    genus: usize,
    marked_boundaries: usize,
}

impl Tiling {
    pub fn parse(text: &str) -> Result<Self, SurfaceError> {
        Tiling::new(TilingSpec::parse(text)?)
    }

    /// Validates a specification and computes its tiles.
    pub fn new(spec: TilingSpec) -> Result<Self, SurfaceError> {
        let mut ids = BTreeSet::new();
        let mut claim = |id: &str| {
            if ids.insert(id.to_string()) {
                Ok(())
            } else {
                Err(SurfaceError::DuplicateId(id.to_string()))
            }
        };
        let mut point_list = Vec::new();
        let mut marked_boundaries = 0;
        for b in &spec.boundaries {
            match b {
                BoundarySpec::Marked { id, points } => {
                    claim(id)?;
                    marked_boundaries += 1;
                    for p in points {
                        claim(p)?;
                        point_list.push(p.clone());
                    }
                }
                BoundarySpec::Unmarked { id, .. } => claim(id)?,
            }
        }
        if marked_boundaries == 0 {
            return Err(SurfaceError::NoMarkedBoundary);
        }
        let mut points = point_list.clone();
        points.sort();
        let pidx: BTreeMap<&str, usize> = points
            .iter()
            .enumerate()
            .map(|(i, p)| (p.as_str(), i))
            .collect();
        let np = points.len();
        let mut next = vec![0; np];
        let mut prev = vec![0; np];
        for b in &spec.boundaries {
            if let BoundarySpec::Marked { points: pts, .. } = b {
                let k = pts.len();
                for i in 0..k {
                    let a = pidx[pts[i].as_str()];
                    let c = pidx[pts[(i + 1) % k].as_str()];
                    next[a] = c;
                    prev[c] = a;
                }
            }
        }

        let mut arc_specs = spec.arcs.clone();
        arc_specs.sort();
        let mut arcs = Vec::new();
        for (id, p, q) in &arc_specs {
            claim(id)?;
            let end = |x: &String| {
                pidx.get(x.as_str())
                    .copied()
                    .ok_or_else(|| SurfaceError::UnknownPoint(x.clone()))
            };
            arcs.push(ArcData {
                id: id.clone(),
                ends: [end(p)?, end(q)?],
            });
        }
        let aidx: BTreeMap<&str, usize> = arcs
            .iter()
            .enumerate()
            .map(|(i, a)| (a.id.as_str(), i))
            .collect();

        let mut fans = vec![Vec::new(); np];
        for (p, slots) in &spec.fans {
            let pi = *pidx
                .get(p.as_str())
                .ok_or_else(|| SurfaceError::UnknownPoint(p.clone()))?;
            for (a, e) in slots {
                let arc = *aidx
                    .get(a.as_str())
                    .ok_or_else(|| SurfaceError::UnknownArc(a.clone()))?;
                fans[pi].push(Slot {
                    arc,
                    end: usize::from(*e) - 1,
                });
            }
        }
        for (pi, fan) in fans.iter().enumerate() {
            let mut want: Vec<Slot> = arcs
                .iter()
                .enumerate()
                .flat_map(|(a, d)| {
                    (0..2)
                        .filter(move |&e| d.ends[e] == pi)
                        .map(move |end| Slot { arc: a, end })
                })
                .collect();
            let mut have = fan.clone();
            want.sort();
            have.sort();
            if want != have {
                return Err(SurfaceError::BadFan {
                    point: points[pi].clone(),
                    msg: "must list each incident arc end exactly once".into(),
                });
            }
        }

        let mut t = Tiling {
            spec,
            points,
            arcs,
            fans,
            next,
            prev,
            tiles: Vec::new(),
            side_tile: BTreeMap::new(),
            corner_tile: BTreeMap::new(),
            genus: 0,
            marked_boundaries,
        };
        t.check_connected()?;
        t.build_tiles()?;
        t.check_topology()?;
        Ok(t)
    }

    fn check_connected(&self) -> Result<(), SurfaceError> {
        let np = self.points.len();
        let mut seen = vec![false; np];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(p) = stack.pop() {
            let mut nbrs = vec![self.next[p], self.prev[p]];
            nbrs.extend(
                self.fans[p]
                    .iter()
                    .map(|s| self.arcs[s.arc].ends[1 - s.end]),
            );
            for q in nbrs {
                if !seen[q] {
                    seen[q] = true;
                    stack.push(q);
                }
            }
        }
        if seen.iter().all(|&x| x) {
            Ok(())
        } else {
            Err(SurfaceError::Disconnected)
        }
    }

    fn build_tiles(&mut self) -> Result<(), SurfaceError> {
        let mut faces: Vec<(Vec<Corner>, Vec<Side>)> = Vec::new();
        let mut visited = BTreeSet::new();
        for p in 0..self.points.len() {
            for i in 0..=self.fans[p].len() {
                let start = Corner { point: p, index: i };
                if visited.contains(&start) {
                    continue;
                }
                let mut corners = Vec::new();
                let mut sides = Vec::new();
                let mut c = start;
                loop {
                    visited.insert(c);
                    corners.push(c);
                    let (side, arrive) = self.step(c);
                    sides.push(side);
                    c = arrive;
                    if c == start {
                        break;
                    }
                }
                faces.push((corners, sides));
            }
        }

        let mut placed: Vec<Option<String>> = vec![None; faces.len()];
        for b in &self.spec.boundaries {
            if let BoundarySpec::Unmarked { id, inside } = b {
                let mut want = Vec::new();
                for a in inside {
                    want.push(
                        self.arc_index(a)
                            .ok_or_else(|| SurfaceError::UnknownArc(a.clone()))?,
                    );
                }
                want.sort();
                let slot = faces.iter().enumerate().position(|(fi, (_, sides))| {
                    let mut got: Vec<Option<usize>> = sides.iter().map(|s| s.arc()).collect();
                    got.sort();
                    placed[fi].is_none() && got == want.iter().map(|&a| Some(a)).collect::<Vec<_>>()
                });
                match slot {
                    Some(fi) => placed[fi] = Some(id.clone()),
                    None => return Err(SurfaceError::UnplacedUnmarked(id.clone())),
                }
            }
        }

        for (fi, ((corners, sides), unmarked)) in faces.into_iter().zip(placed).enumerate() {
            let walk = self.walk_text(&corners, &sides);
            let kind = match (&unmarked, sides.len()) {
                (Some(_), 1) => TileKind::TypeI,
                (Some(_), 2) => TileKind::TypeII,
                (Some(_), n) => return Err(SurfaceError::CrowdedTile { walk, sides: n }),
                (None, n) if n >= 3 => TileKind::Polygon(n),
                (None, _) => return Err(SurfaceError::Degenerate { walk }),
            };
            for (k, &s) in sides.iter().enumerate() {
                self.side_tile.insert(s, (fi, k));
            }
            for (k, &c) in corners.iter().enumerate() {
                self.corner_tile.insert(c, (fi, k));
            }
            self.tiles.push(Tile {
                corners,
                sides,
                kind,
                unmarked,
            });
        }
        Ok(())
    }

    fn check_topology(&mut self) -> Result<(), SurfaceError> {
        let v = self.points.len() as i64;
        let e = (self.arcs.len() + self.points.len()) as i64;
        let f = (self.tiles.len() + self.marked_boundaries) as i64;
        let chi = v - e + f;
        if chi > 2 || (2 - chi) % 2 != 0 {
            return Err(SurfaceError::BadEuler(chi));
        }
        self.genus = ((2 - chi) / 2) as usize;
        let unmarked = self.unmarked_count();
        if self.genus == 0 && self.marked_boundaries == 1 && unmarked == 0 && self.points.len() < 4
        {
            return Err(SurfaceError::SmallDisc(self.points.len()));
        }
        Ok(())
    }

    fn walk_text(&self, corners: &[Corner], sides: &[Side]) -> String {
        let mut out = String::new();
        for (c, s) in corners.iter().zip(sides) {
            out += &self.points[c.point];
            match s {
                Side::Arc { arc, .. } => out += &format!(" -{}- ", self.arcs[*arc].id),
                Side::Segment { .. } => out += " ~ ",
            }
        }
        out += &self.points[corners[0].point];
        out
    }

    /// Item `i` at point `p`.
    pub fn item(&self, p: usize, i: usize) -> Item {
        let k = self.fans[p].len();
        if i == 0 {
            Item::Next
        } else if i <= k {
            Item::Slot(self.fans[p][i - 1])
        } else {
            Item::Prev
        }
    }

    /// Item index of an arc end at its point.
    pub fn slot_item(&self, s: Slot) -> (usize, usize) {
        let p = self.arcs[s.arc].ends[s.end];
        let pos = self.fans[p]
            .iter()
            .position(|&x| x == s)
            .expect("slot in fan");
        (p, pos + 1)
    }

    /// Walk the later item of a corner; returns the side and the next corner.
    fn step(&self, c: Corner) -> (Side, Corner) {
        match self.item(c.point, c.index + 1) {
            Item::Slot(s) => {
                let (q, j) = self.slot_item(Slot {
                    arc: s.arc,
                    end: 1 - s.end,
                });
                (
                    Side::Arc {
                        arc: s.arc,
                        from_end: s.end,
                    },
                    Corner { point: q, index: j },
                )
            }
            Item::Prev => (
                Side::Segment { from: c.point },
                Corner {
                    point: self.prev[c.point],
                    index: 0,
                },
            ),
            Item::Next => unreachable!("a corner never departs along its first item"),
        }
    }

    pub fn spec(&self) -> &TilingSpec {
        &self.spec
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn point_index(&self, id: &str) -> Option<usize> {
        self.points.binary_search_by(|p| p.as_str().cmp(id)).ok()
    }

    pub fn arcs(&self) -> &[ArcData] {
        &self.arcs
    }

    pub fn arc_index(&self, id: &str) -> Option<usize> {
        self.arcs.iter().position(|a| a.id == id)
    }

    pub fn fan(&self, p: usize) -> &[Slot] {
        &self.fans[p]
    }

    pub fn next(&self, p: usize) -> usize {
        self.next[p]
    }

    pub fn prev(&self, p: usize) -> usize {
        self.prev[p]
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn marked_boundary_count(&self) -> usize {
        self.marked_boundaries
    }

    pub fn unmarked_count(&self) -> usize {
        self.spec
            .boundaries
            .iter()
            .filter(|b| matches!(b, BoundarySpec::Unmarked { .. }))
            .count()
    }

    /// Tile and position of a side.
    pub fn side_location(&self, s: Side) -> (usize, usize) {
        self.side_tile[&s]
    }

    /// Tile and position of a corner.
    pub fn corner_location(&self, c: Corner) -> (usize, usize) {
        self.corner_tile[&c]
    }

    pub fn tile_text(&self, t: usize) -> String {
        let tile = &self.tiles[t];
        self.walk_text(&tile.corners, &tile.sides)
    }

    pub fn is_triangulation(&self) -> bool {
        self.tiles.iter().all(|t| t.kind == TileKind::Polygon(3))
    }
}

/// Where an arrow of the tiling algebra comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArrowInfo {
    pub point: usize,
    pub source_slot: Slot,
    pub target_slot: Slot,
    /// The corner between the two slots.
    pub corner: Corner,
}

/// The tiling algebra together with the geometric origin of each arrow.
#[derive(Debug, Clone)]
pub struct TilingAlgebra {
    pub presentation: GentlePresentation,
    /// Indexed like the arrows of the presentation.
    pub arrows: Vec<ArrowInfo>,
}

impl TilingAlgebra {
    /// The arrow sitting in a corner, if the corner lies between two slots.
    pub fn arrow_at(&self, c: Corner) -> Option<usize> {
        self.arrows.iter().position(|a| a.corner == c)
    }
}

fn build_presentation<I: Clone>(
    vertex_ids: &[String],
    raw: Vec<(String, usize, usize, I)>,
    relation: impl Fn(&I, &I) -> bool,
) -> Result<(GentlePresentation, Vec<I>), SurfaceError> {
    let mut raw = raw;
    raw.sort_by(|a, b| a.0.cmp(&b.0));
    let q = Quiver::new(
        vertex_ids.iter().cloned(),
        raw.iter()
            .map(|(id, s, t, _)| (id.clone(), vertex_ids[*s].clone(), vertex_ids[*t].clone())),
    )?;
    let mut rel_ids = Vec::new();
    for a in &raw {
        for b in &raw {
            if a.2 == b.1 && relation(&a.3, &b.3) {
                rel_ids.push((a.0.as_str(), b.0.as_str()));
            }
        }
    }
    let rels = resolve_relations(&q, rel_ids)?;
    let presentation = GentlePresentation::new(q, rels)?;
    Ok((presentation, raw.into_iter().map(|r| r.3).collect()))
}

fn arrow_name(t: &Tiling, used: &mut BTreeMap<String, usize>, info: &ArrowInfo) -> String {
    // identifiers may not contain `#`, which starts a comment in quiver files
    let base = format!(
        "{}>{}@{}",
        t.arcs[info.source_slot.arc].id, t.arcs[info.target_slot.arc].id, t.points[info.point]
    );
    let n = used.entry(base.clone()).or_insert(0);
    *n += 1;
    if *n == 1 {
        base
    } else {
        format!("{base}/{n}")
    }
}

/// Vertices are the arcs; each pair of neighbouring fan slots gives an arrow,
/// and `ab` is a relation unless `a` ends in the slot where `b` starts.
pub fn tiling_algebra(t: &Tiling) -> Result<TilingAlgebra, SurfaceError> {
    let mut raw = Vec::new();
    let mut used = BTreeMap::new();
    for p in 0..t.points.len() {
        for (j, w) in t.fans[p].windows(2).enumerate() {
            let info = ArrowInfo {
                point: p,
                source_slot: w[0],
                target_slot: w[1],
                corner: Corner {
                    point: p,
                    index: j + 1,
                },
            };
            let id = arrow_name(t, &mut used, &info);
            raw.push((id, w[0].arc, w[1].arc, info));
        }
    }
    let ids: Vec<String> = t.arcs.iter().map(|a| a.id.clone()).collect();
    let (presentation, arrows) = build_presentation(&ids, raw, |a: &ArrowInfo, b: &ArrowInfo| {
        a.target_slot != b.source_slot
    })?;
    Ok(TilingAlgebra {
        presentation,
        arrows,
    })
}

/// Arrow identity independent of arc numbering: the point and the two arc
/// ends it joins.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ArrowKey {
    pub point: String,
    pub source: (String, usize),
    pub target: (String, usize),
}

fn arrow_key(t: &Tiling, info: &ArrowInfo) -> ArrowKey {
    let end = |s: Slot| (t.arcs[s.arc].id.clone(), s.end);
    ArrowKey {
        point: t.points[info.point].clone(),
        source: end(info.source_slot),
        target: end(info.target_slot),
    }
}

impl TilingAlgebra {
    pub fn keys(&self, t: &Tiling) -> Vec<ArrowKey> {
        self.arrows.iter().map(|a| arrow_key(t, a)).collect()
    }
}

/// The result of completing a tiling to a triangulation.
#[derive(Debug, Clone)]
pub struct Completion {
    pub tiling: Tiling,
    pub added_points: Vec<String>,
    pub added_arcs: Vec<String>,
}

fn fresh_id(taken: &BTreeSet<String>, base: &str) -> String {
    if !taken.contains(base) {
        return base.to_string();
    }
    (1..)
        .map(|n| format!("{base}{n}"))
        .find(|c| !taken.contains(c))
        .expect("unbounded")
}

fn all_ids(spec: &TilingSpec) -> BTreeSet<String> {
    let mut ids = BTreeSet::new();
    for b in &spec.boundaries {
        match b {
            BoundarySpec::Marked { id, points } => {
                ids.insert(id.clone());
                ids.extend(points.iter().cloned());
            }
            BoundarySpec::Unmarked { id, .. } => {
                ids.insert(id.clone());
            }
        }
    }
    ids.extend(spec.arcs.iter().map(|a| a.0.clone()));
    ids
}

/// Adds an arc between two corners of the same tile. Each new end goes
/// right after the corner's first item.
fn add_arc(t: &Tiling, spec: &mut TilingSpec, id: &str, c1: Corner, c2: Corner) {
    let p = t.points[c1.point].clone();
    let q = t.points[c2.point].clone();
    spec.arcs.push((id.to_string(), p.clone(), q.clone()));
    let mut inserts = vec![(p, c1.index, 1u8), (q, c2.index, 2u8)];
    // at a shared point, insert at the later position first
    inserts.sort_by(|a, b| (&b.0, b.1).cmp(&(&a.0, a.1)));
    for (point, index, end) in inserts {
        spec.fans
            .entry(point)
            .or_default()
            .insert(index, (id.to_string(), end));
    }
}

/// Marks each unmarked boundary with a new point joined to the least corner
/// of its tile, then cuts every polygon by the diagonal from its least
/// corner to the corner two steps further along the walk.
pub fn complete_to_triangulation(t: &Tiling) -> Result<Completion, SurfaceError> {
    let mut cur = t.clone();
    let mut added_points = Vec::new();
    let mut added_arcs = Vec::new();
    let mut counter = 0;
    let mut fresh_arc = |spec: &TilingSpec| {
        let taken = all_ids(spec);
        loop {
            counter += 1;
            let id = format!("t{counter}");
            if !taken.contains(&id) {
                return id;
            }
        }
    };
    loop {
        let host = cur.tiles.iter().find(|x| x.unmarked.is_some()).cloned();
        let Some(host) = host else { break };
        let bid = host.unmarked.clone().expect("checked");
        let mut spec = cur.spec.clone();
        let m = fresh_id(&all_ids(&spec), &format!("m_{bid}"));
        for b in spec.boundaries.iter_mut() {
            if matches!(b, BoundarySpec::Unmarked { id, .. } if *id == bid) {
                *b = BoundarySpec::Marked {
                    id: bid.clone(),
                    points: vec![m.clone()],
                };
            }
        }
        let c = *host.corners.iter().min().expect("tile has corners");
        let arc = fresh_arc(&spec);
        let p = cur.points[c.point].clone();
        spec.arcs.push((arc.clone(), p.clone(), m.clone()));
        spec.fans
            .entry(p)
            .or_default()
            .insert(c.index, (arc.clone(), 1));
        spec.fans.insert(m.clone(), vec![(arc.clone(), 2)]);
        cur = Tiling::new(spec)?;
        added_points.push(m);
        added_arcs.push(arc);
    }
    while let Some(tile) = cur.tiles.iter().find(|x| x.len() > 3).cloned() {
        let mut spec = cur.spec.clone();
        let arc = fresh_arc(&spec);
        add_arc(&cur, &mut spec, &arc, tile.corners[0], tile.corners[2]);
        cur = Tiling::new(spec)?;
        added_arcs.push(arc);
    }
    Ok(Completion {
        tiling: cur,
        added_points,
        added_arcs,
    })
}

/// The algebra obtained from a triangulation by keeping only some arcs:
/// arrows are direct paths through removed arcs, and `ab` is a relation
/// when the two paths meet in a relation.
pub fn collapse_presentation(
    t: &Tiling,
    keep: &[String],
) -> Result<(GentlePresentation, Vec<ArrowKey>), SurfaceError> {
    let full = tiling_algebra(t)?;
    let fp = &full.presentation;
    let fq = fp.quiver();
    let mut kept: Vec<String> = keep.to_vec();
    kept.sort();
    kept.dedup();
    for k in &kept {
        if t.arc_index(k).is_none() {
            return Err(SurfaceError::UnknownArc(k.clone()));
        }
    }
    let vidx = |id: &str| kept.binary_search_by(|x| x.as_str().cmp(id)).ok();
    let mut raw = Vec::new();
    let mut used = BTreeMap::new();
    for (start, arrow) in fq.arrows().iter().enumerate() {
        let Some(src) = vidx(fq.vertex(arrow.source)) else {
            continue;
        };
        let mut last = start;
        let tgt = loop {
            let v = fq.arrow(last).target;
            if let Some(i) = vidx(fq.vertex(v)) {
                break Some(i);
            }
            match fq.outgoing(v).find(|&b| !fp.is_relation(last, b)) {
                Some(b) => last = b,
                None => break None,
            }
        };
        let Some(tgt) = tgt else { continue };
        let info = ArrowInfo {
            point: full.arrows[start].point,
            source_slot: full.arrows[start].source_slot,
            target_slot: full.arrows[last].target_slot,
            corner: full.arrows[start].corner,
        };
        let id = arrow_name(t, &mut used, &info);
        raw.push((id, src, tgt, (arrow_key(t, &info), start, last)));
    }
    let (presentation, infos) = build_presentation(&kept, raw, |a, b| fp.is_relation(a.2, b.1))?;
    Ok((presentation, infos.into_iter().map(|i| i.0).collect()))
}

/// Identity on vertices, arrows matched by key, then equal relation sets.
pub fn presentations_isomorphic(
    a: &GentlePresentation,
    a_keys: &[ArrowKey],
    b: &GentlePresentation,
    b_keys: &[ArrowKey],
) -> bool {
    if a.quiver().vertices() != b.quiver().vertices() || a_keys.len() != b_keys.len() {
        return false;
    }
    let mut map = Vec::with_capacity(a_keys.len());
    for (i, k) in a_keys.iter().enumerate() {
        let Some(j) = b_keys.iter().position(|x| x == k) else {
            return false;
        };
        let (x, y) = (a.quiver().arrow(i), b.quiver().arrow(j));
        if x.source != y.source || x.target != y.target {
            return false;
        }
        map.push(j);
    }
    let mapped: BTreeSet<(usize, usize)> = a
        .relations()
        .iter()
        .map(|&(x, y)| (map[x], map[y]))
        .collect();
    mapped == *b.relations()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn kinds(t: &Tiling) -> Vec<String> {
        t.tiles().iter().map(|x| x.kind.to_string()).collect()
    }

    fn describe(p: &GentlePresentation) -> (Vec<String>, Vec<(String, String)>) {
        let q = p.quiver();
        let arrows = q
            .arrows()
            .iter()
            .map(|a| format!("{}:{}>{}", a.id, q.vertex(a.source), q.vertex(a.target)))
            .collect();
        let rels = p
            .relations()
            .iter()
            .map(|&(a, b)| (q.arrow(a).id.clone(), q.arrow(b).id.clone()))
            .collect();
        (arrows, rels)
    }

    #[test]
    fn pent_tiles_and_algebra() {
        let t = fixtures::pent();
        assert_eq!(kinds(&t), vec!["3-gon"; 3]);
        let a = tiling_algebra(&t).unwrap();
        let (arrows, rels) = describe(&a.presentation);
        assert_eq!(arrows, vec!["x>y@p1:x>y"]);
        assert!(rels.is_empty());
        assert!(t.is_triangulation());
    }

    #[test]
    fn loop_tiles_and_algebra() {
        let t = fixtures::loop_tiling();
        let mut k = kinds(&t);
        k.sort();
        assert_eq!(k, vec!["3-gon", "type I"]);
        let (arrows, rels) = describe(&tiling_algebra(&t).unwrap().presentation);
        assert_eq!(arrows, vec!["x>x@p:x>x"]);
        assert_eq!(rels, vec![("x>x@p".to_string(), "x>x@p".to_string())]);
    }

    #[test]
    fn kron_is_kronecker() {
        let t = fixtures::kron();
        assert_eq!(t.genus(), 0);
        let (arrows, rels) = describe(&tiling_algebra(&t).unwrap().presentation);
        assert_eq!(arrows, vec!["x>y@p:x>y", "x>y@q:x>y"]);
        assert!(rels.is_empty());
    }

    #[test]
    fn digon_has_two_zero_compositions() {
        let t = fixtures::digon();
        let mut k = kinds(&t);
        k.sort();
        assert_eq!(k, vec!["3-gon", "3-gon", "type II"]);
        let (arrows, rels) = describe(&tiling_algebra(&t).unwrap().presentation);
        assert_eq!(arrows.len(), 2);
        assert_eq!(rels.len(), 2);
    }

    #[test]
    fn adjacent_arc_is_rejected() {
        let text =
            "tiling\nboundary b marked p1 p2 p3 p4\narc x p1 p2\nfan p1 : x.1\nfan p2 : x.2\nend\n";
        assert!(matches!(
            Tiling::parse(text),
            Err(SurfaceError::Degenerate { .. })
        ));
    }

    #[test]
    fn small_disc_is_rejected() {
        let text = "tiling\nboundary b marked p1 p2 p3\nend\n";
        assert_eq!(Tiling::parse(text).unwrap_err(), SurfaceError::SmallDisc(3));
    }

    #[test]
    fn spec_round_trips_through_text() {
        for (_, t) in fixtures::tilings() {
            let again = TilingSpec::parse(&t.spec().to_text()).unwrap();
            assert_eq!(&again, t.spec());
        }
    }

    #[test]
    fn completion_triangulates_and_collapses_back() {
        for (name, t) in fixtures::tilings() {
            let c = complete_to_triangulation(&t).unwrap();
            assert!(c.tiling.is_triangulation(), "{name}");
            assert_eq!(c.added_points.len(), t.unmarked_count(), "{name}");
            let keep: Vec<String> = t.arcs().iter().map(|a| a.id.clone()).collect();
            let (p, keys) = collapse_presentation(&c.tiling, &keep).unwrap();
            let a = tiling_algebra(&t).unwrap();
            assert!(
                presentations_isomorphic(&p, &keys, &a.presentation, &a.keys(&t)),
                "{name}"
            );
        }
    }

    #[test]
    fn completion_of_loop_adds_two_arcs() {
        let c = complete_to_triangulation(&fixtures::loop_tiling()).unwrap();
        assert_eq!(c.added_points, vec!["m_b2"]);
        assert_eq!(c.added_arcs.len(), 2);
        assert_eq!(c.tiling.tiles().len(), 3);
    }

    #[test]
    fn keeping_everything_is_identity() {
        let c = complete_to_triangulation(&fixtures::digon()).unwrap();
        let t = &c.tiling;
        let keep: Vec<String> = t.arcs().iter().map(|a| a.id.clone()).collect();
        let (p, keys) = collapse_presentation(t, &keep).unwrap();
        let a = tiling_algebra(t).unwrap();
        assert!(presentations_isomorphic(
            &p,
            &keys,
            &a.presentation,
            &a.keys(t)
        ));
    }
}
