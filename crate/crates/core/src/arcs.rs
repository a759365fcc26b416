//! Permissible arcs and closed curves.
//!
//! An arc is stored by what it does relative to the tiling: the arcs it
//! crosses (each with the side through which it leaves its tile), the corner
//! it turns around between two crossings, and a descriptor for each end.
//! An end descriptor names a tile, a corner of that tile and a winding flag.
//! The end segment runs counterclockwise along the tile boundary from that
//! corner, adding `winding` full turns, up to the first crossing.
//!
//! Homotopy questions are answered in a fixed completion of the tiling to a
//! triangulation. There a curve in minimal position is a crossing sequence
//! without backtracks or turns around its own endpoints, so pivots and
//! rotations are boundary segment concatenations followed by reduction.

use std::fmt;

use thiserror::Error;

use crate::algebra::{GentlePresentation, Sign};
use crate::artheory::{hooks, ArError};
use crate::strings::{
    compose, detect_band, validate_string, Band, Letter, StringError, StringWord,
};
use crate::surface::{
    complete_to_triangulation, tiling_algebra, Corner, Item, Side, Slot, SurfaceError, TileKind,
    Tiling, TilingAlgebra,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArcError {
    #[error("not permissible: {0}")]
    NotPermissible(Reason),
    #[error("the zero string has no arc")]
    ZeroString,
    #[error("unknown arc `{0}`")]
    UnknownArc(String),
    #[error("unknown marked point `{0}`")]
    UnknownPoint(String),
    #[error("unknown tile `{0}`")]
    UnknownTile(String),
    #[error("arc literal: {0}")]
    Parse(String),
    #[error("not a band: {0}")]
    NotBand(String),
    #[error("the exponent of a closed curve must be positive")]
    ZeroExponent,
    #[error(transparent)]
    String(#[from] StringError),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Ar(#[from] ArError),
}

/// Why a curve fails to be permissible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reason {
    /// An end winds more than once around an unmarked boundary.
    Winding { end: &'static str, winding: u8 },
    /// Two consecutive crossings do not meet in a corner of a tile.
    NoLocalTriangle { position: usize, detail: String },
    /// The curve can be homotoped to cross fewer arcs.
    NonMinimal(String),
    /// An end descriptor does not fit the crossings.
    BadEnd(String),
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reason::Winding { end, winding } => {
                write!(
                    f,
                    "the {end} winds {winding} times around an unmarked boundary"
                )
            }
            Reason::NoLocalTriangle { position, detail } => {
                write!(
                    f,
                    "no local triangle between crossings {position} and {}: {detail}",
                    position + 1
                )
            }
            Reason::NonMinimal(d) => write!(f, "not in minimal position: {d}"),
            Reason::BadEnd(d) => write!(f, "bad end: {d}"),
        }
    }
}

/// One crossing with an arc of the tiling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    pub arc: usize,
    /// Side of the tile being left.
    pub exit: Side,
}

/// The turn between two crossings, around `corner` of `tile`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Passage {
    pub tile: usize,
    pub corner: Corner,
    /// Clockwise around the corner point, i.e. along the arrow.
    pub clockwise: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EndDescriptor {
    pub tile: usize,
    /// Position of the corner in the tile walk.
    pub corner: usize,
    pub winding: u8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermissibleArc {
    pub crossings: Vec<Crossing>,
    /// `passages[i]` sits between `crossings[i]` and `crossings[i + 1]`.
    pub passages: Vec<Passage>,
    pub start: EndDescriptor,
    pub end: EndDescriptor,
}

impl PermissibleArc {
    pub fn is_trivial(&self) -> bool {
        self.crossings.is_empty()
    }

    pub fn reverse(&self) -> PermissibleArc {
        PermissibleArc {
            crossings: self
                .crossings
                .iter()
                .rev()
                .map(|c| Crossing {
                    arc: c.arc,
                    exit: c.exit.opposite().expect("crossed sides are arcs"),
                })
                .collect(),
            passages: self
                .passages
                .iter()
                .rev()
                .map(|p| Passage {
                    clockwise: !p.clockwise,
                    ..*p
                })
                .collect(),
            start: self.end,
            end: self.start,
        }
    }
}

/// A closed curve; `passages[i]` follows `crossings[i]`, cyclically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedCurve {
    pub crossings: Vec<Crossing>,
    pub passages: Vec<Passage>,
}

/// Either kind of curve, for reading morphisms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Curve {
    Arc(PermissibleArc),
    Closed(ClosedCurve),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionVector {
    /// Crossing count per arc of the tiling, in arc order.
    pub counts: Vec<usize>,
}

impl IntersectionVector {
    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArcEnd {
    Start,
    End,
}

/// Which configuration a pivot went through.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PivotCase {
    /// A hook is added from a polygon tile.
    Polygon,
    /// A hook is added from a type I tile.
    TypeI,
    /// A hook is added from a type II tile.
    TypeII,
    /// A cohook is removed.
    Cohook,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pivot {
    pub arc: PermissibleArc,
    pub string: StringWord,
    pub case: PivotCase,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TauInverse {
    Injective,
    Arc {
        arc: PermissibleArc,
        string: StringWord,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RepType {
    Finite,
    Infinite { band: Band, witness: ClosedCurve },
}

/// An arc as typed by a user: ends by tile and point, pivots by point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcCandidate {
    pub start: (usize, String, u8),
    pub crossings: Vec<String>,
    pub pivots: Vec<String>,
    pub end: (usize, String, u8),
}

impl ArcCandidate {
    /// `T<tile>@<point>[/<winding>] : <arc> <point> <arc> ... : T<tile>@<point>[/<winding>]`
    pub fn parse(text: &str) -> Result<Self, ArcError> {
        let bad = |m: &str| ArcError::Parse(m.to_string());
        let parts: Vec<&str> = text.split(':').map(str::trim).collect();
        let [start, word, end] = parts.as_slice() else {
            return Err(bad("expected `<end> : <word> : <end>`"));
        };
        let end_of = |s: &str| -> Result<(usize, String, u8), ArcError> {
            let s = s
                .strip_prefix('T')
                .ok_or_else(|| bad("ends start with `T<tile>`"))?;
            let (tile, rest) = s
                .split_once('@')
                .ok_or_else(|| bad("ends look like `T0@p`"))?;
            let tile = tile.parse().map_err(|_| bad("tile must be a number"))?;
            let (point, winding) = match rest.split_once('/') {
                Some((p, w)) => (p, w.parse().map_err(|_| bad("winding must be a number"))?),
                None => (rest, 0),
            };
            Ok((tile, point.to_string(), winding))
        };
        let tokens: Vec<&str> = word.split_whitespace().collect();
        if !tokens.is_empty() && tokens.len().is_multiple_of(2) {
            return Err(bad("the word alternates arcs and pivot points"));
        }
        Ok(ArcCandidate {
            start: end_of(start)?,
            crossings: tokens.iter().step_by(2).map(|s| s.to_string()).collect(),
            pivots: tokens
                .iter()
                .skip(1)
                .step_by(2)
                .map(|s| s.to_string())
                .collect(),
            end: end_of(end)?,
        })
    }
}

/// A path in the triangulation: start corner, sides left one after another,
/// end corner.
#[derive(Debug, Clone, PartialEq, Eq)]
struct TriPath {
    start: Corner,
    sides: Vec<Side>,
    end: Corner,
}

impl TriPath {
    fn reverse(&self) -> TriPath {
        TriPath {
            start: self.end,
            sides: self
                .sides
                .iter()
                .rev()
                .map(|s| s.opposite().expect("arc side"))
                .collect(),
            end: self.start,
        }
    }
}

/// Removes backtracks and turns around the endpoints until none remain.
fn reduce(tri: &Tiling, mut c: TriPath) -> TriPath {
    loop {
        let mut changed = false;
        let mut sides: Vec<Side> = Vec::with_capacity(c.sides.len());
        for s in c.sides.drain(..) {
            if sides.last().and_then(|l| l.opposite()) == Some(s) {
                sides.pop();
                changed = true;
            } else {
                sides.push(s);
            }
        }
        c.sides = sides;
        if let Some(&first) = c.sides.first() {
            let (tile, pos) = tri.corner_location(c.start);
            let (_, k) = tri.side_location(first);
            let m = tri.tiles()[tile].len();
            if k == pos || (k + 1) % m == pos {
                let (tb, kb) = tri.side_location(first.opposite().expect("arc side"));
                let mb = tri.tiles()[tb].len();
                let at = if k == pos { (kb + 1) % mb } else { kb };
                c.start = tri.tiles()[tb].corners[at];
                c.sides.remove(0);
                changed = true;
            }
        }
        if let Some(&last) = c.sides.last() {
            let (tile, pos) = tri.corner_location(c.end);
            let (_, k) = tri.side_location(last.opposite().expect("arc side"));
            let m = tri.tiles()[tile].len();
            if k == pos || (k + 1) % m == pos {
                let (ta, ka) = tri.side_location(last);
                let ma = tri.tiles()[ta].len();
                let at = if k == pos { (ka + 1) % ma } else { ka };
                c.end = tri.tiles()[ta].corners[at];
                c.sides.pop();
                changed = true;
            }
        }
        if !changed {
            return c;
        }
    }
}

/// A tiling together with its algebra and the completion used for homotopy.
#[derive(Debug, Clone)]
pub struct ArcModel {
    tiling: Tiling,
    algebra: TilingAlgebra,
    tri: Tiling,
    arc_to_tri: Vec<usize>,
    arc_from_tri: Vec<Option<usize>>,
    point_to_tri: Vec<usize>,
    point_from_tri: Vec<Option<usize>>,
    /// Item index in the triangulation for each item of the tiling.
    items: Vec<Vec<usize>>,
}

impl ArcModel {
    pub fn new(t: &Tiling) -> Result<Self, ArcError> {
        let algebra = tiling_algebra(t)?;
        let tri = complete_to_triangulation(t)?.tiling;
        let arc_to_tri: Vec<usize> = t
            .arcs()
            .iter()
            .map(|a| tri.arc_index(&a.id).expect("completion keeps arcs"))
            .collect();
        let mut arc_from_tri = vec![None; tri.arcs().len()];
        for (a, &ta) in arc_to_tri.iter().enumerate() {
            arc_from_tri[ta] = Some(a);
        }
        let point_to_tri: Vec<usize> = t
            .points()
            .iter()
            .map(|p| tri.point_index(p).expect("completion keeps points"))
            .collect();
        let mut point_from_tri = vec![None; tri.points().len()];
        for (p, &tp) in point_to_tri.iter().enumerate() {
            point_from_tri[tp] = Some(p);
        }
        let mut items = Vec::new();
        for (p, &tp) in point_to_tri.iter().enumerate() {
            let fan = t.fan(p);
            let tfan = tri.fan(tp);
            let mut row = vec![0];
            for s in fan {
                let target = Slot {
                    arc: arc_to_tri[s.arc],
                    end: s.end,
                };
                row.push(
                    tfan.iter()
                        .position(|&x| x == target)
                        .expect("slot survives")
                        + 1,
                );
            }
            row.push(tfan.len() + 1);
            items.push(row);
        }
        Ok(ArcModel {
            tiling: t.clone(),
            algebra,
            tri,
            arc_to_tri,
            arc_from_tri,
            point_to_tri,
            point_from_tri,
            items,
        })
    }

    pub fn tiling(&self) -> &Tiling {
        &self.tiling
    }

    pub fn algebra(&self) -> &TilingAlgebra {
        &self.algebra
    }

    pub fn presentation(&self) -> &GentlePresentation {
        &self.algebra.presentation
    }

    pub fn triangulation(&self) -> &Tiling {
        &self.tri
    }

    fn tri_side(&self, s: Side) -> Side {
        match s {
            Side::Arc { arc, from_end } => Side::Arc {
                arc: self.arc_to_tri[arc],
                from_end,
            },
            Side::Segment { from } => Side::Segment {
                from: self.point_to_tri[from],
            },
        }
    }

    fn tiling_side(&self, s: Side) -> Option<Side> {
        match s {
            Side::Arc { arc, from_end } => {
                self.arc_from_tri[arc].map(|arc| Side::Arc { arc, from_end })
            }
            Side::Segment { .. } => None,
        }
    }

    /// The tiling corner containing a corner of the triangulation.
    fn tiling_corner(&self, c: Corner) -> Option<Corner> {
        let p = self.point_from_tri[c.point]?;
        let index = self.items[p].iter().filter(|&&i| i <= c.index).count() - 1;
        Some(Corner { point: p, index })
    }

    /// Sides crossed while turning through a tiling corner.
    fn turn(&self, c: Corner, clockwise: bool) -> Vec<Side> {
        let tp = self.point_to_tri[c.point];
        let (a, b) = (
            self.items[c.point][c.index],
            self.items[c.point][c.index + 1],
        );
        let fan = self.tri.fan(tp);
        let side = |j: usize, cw: bool| {
            let s = fan[j - 1];
            Side::Arc {
                arc: s.arc,
                from_end: if cw { s.end } else { 1 - s.end },
            }
        };
        if clockwise {
            (a + 1..b).map(|j| side(j, true)).collect()
        } else {
            (a + 1..b).rev().map(|j| side(j, false)).collect()
        }
    }

    /// The side through which a passage enters its tile and the one it leaves by.
    fn passage_sides(&self, p: &Passage) -> Option<(Side, Side)> {
        let t = &self.tiling;
        let (Item::Slot(before), Item::Slot(after)) = (
            t.item(p.corner.point, p.corner.index),
            t.item(p.corner.point, p.corner.index + 1),
        ) else {
            return None;
        };
        let arriving = Side::Arc {
            arc: before.arc,
            from_end: 1 - before.end,
        };
        let departing = Side::Arc {
            arc: after.arc,
            from_end: after.end,
        };
        Some(if p.clockwise {
            (arriving, departing)
        } else {
            (departing, arriving)
        })
    }

    /// End segment from `corner` of `tile` up to and including the crossing
    /// of side `k`.
    fn route(&self, tile: usize, corner: usize, winding: u8, k: usize) -> (Corner, Vec<Side>) {
        let tl = &self.tiling.tiles()[tile];
        let m = tl.len();
        let turns = (k + m - corner) % m + usize::from(winding) * m;
        let c = tl.corners[corner];
        let start = Corner {
            point: self.point_to_tri[c.point],
            index: self.items[c.point][c.index + 1] - 1,
        };
        let mut sides = Vec::new();
        for j in 1..=turns {
            sides.extend(self.turn(tl.corners[(corner + j) % m], true));
        }
        sides.push(self.tri_side(tl.sides[k]));
        (start, sides)
    }

    fn canonical_end(&self, exit: Side) -> EndDescriptor {
        let (tile, k) = self.tiling.side_location(exit);
        let tl = &self.tiling.tiles()[tile];
        let m = tl.len();
        EndDescriptor {
            tile,
            corner: (k + m - 1) % m,
            winding: u8::from(tl.kind == TileKind::TypeI),
        }
    }

    /// Sign of the trivial string read off a single crossing: the sign that
    /// lets it absorb the letter the curve could continue or begin with.
    fn trivial_sign(&self, exit: Side) -> (usize, Sign) {
        let Side::Arc {
            arc: v,
            from_end: e,
        } = exit
        else {
            unreachable!("crossings are arcs")
        };
        let p = self.presentation();
        let fits = |s: Sign| {
            let t = StringWord::trivial(v, s);
            self.algebra.arrows.iter().enumerate().any(|(a, info)| {
                let after = |l: Letter| compose(p, &t, &StringWord::Letters(vec![l])).is_ok();
                let before = |l: Letter| compose(p, &StringWord::Letters(vec![l]), &t).is_ok();
                (info.source_slot == Slot { arc: v, end: e } && after(Letter::direct(a)))
                    || (info.target_slot == Slot { arc: v, end: 1 - e }
                        && after(Letter::inverse(a)))
                    || (info.target_slot == Slot { arc: v, end: e } && before(Letter::direct(a)))
                    || (info.source_slot == Slot { arc: v, end: 1 - e }
                        && before(Letter::inverse(a)))
            })
        };
        let sign = match (fits(Sign::Plus), fits(Sign::Minus)) {
            (true, false) => Sign::Plus,
            (false, true) => Sign::Minus,
            _ if e == 0 => Sign::Plus,
            _ => Sign::Minus,
        };
        (v, sign)
    }

    fn trivial_exit(&self, v: usize, x: Sign) -> Side {
        let side = |from_end| Side::Arc { arc: v, from_end };
        if self.trivial_sign(side(0)).1 == x {
            side(0)
        } else {
            side(1)
        }
    }

    /// The arc `gamma(w)` with both ends in normal form.
    pub fn string_to_arc(&self, w: &StringWord) -> Result<PermissibleArc, ArcError> {
        let q = self.presentation().quiver();
        let (crossings, passages) = match w {
            StringWord::Zero => return Err(ArcError::ZeroString),
            StringWord::Trivial { vertex, sign } => {
                if *vertex >= q.vertex_count() {
                    return Err(ArcError::UnknownArc(vertex.to_string()));
                }
                let exit = self.trivial_exit(*vertex, *sign);
                (vec![Crossing { arc: *vertex, exit }], vec![])
            }
            StringWord::Letters(letters) => {
                validate_string(self.presentation(), letters)?;
                let passages: Vec<Passage> = letters
                    .iter()
                    .map(|l| {
                        let info = &self.algebra.arrows[l.arrow];
                        Passage {
                            tile: self.tiling.corner_location(info.corner).0,
                            corner: info.corner,
                            clockwise: !l.inverse,
                        }
                    })
                    .collect();
                let mut crossings = Vec::new();
                let (entered, _) = self
                    .passage_sides(&passages[0])
                    .expect("arrow corners lie between arcs");
                crossings.push(Crossing {
                    arc: letters[0].source(q),
                    exit: entered.opposite().expect("arc side"),
                });
                for (i, pass) in passages.iter().enumerate() {
                    let (_, exit) = self
                        .passage_sides(pass)
                        .expect("arrow corners lie between arcs");
                    if let Some(next) = passages.get(i + 1) {
                        let (entered, _) = self
                            .passage_sides(next)
                            .expect("arrow corners lie between arcs");
                        debug_assert_eq!(entered.opposite(), Some(exit));
                    }
                    crossings.push(Crossing {
                        arc: letters[i].target(q),
                        exit,
                    });
                }
                (crossings, passages)
            }
        };
        let first = crossings[0].exit;
        let last = crossings[crossings.len() - 1].exit;
        Ok(PermissibleArc {
            start: self.canonical_end(first),
            end: self.canonical_end(last.opposite().expect("arc side")),
            crossings,
            passages,
        })
    }

    /// The same crossings and turns with both ends in normal form.
    pub fn normalize(&self, a: &PermissibleArc) -> PermissibleArc {
        if a.is_trivial() {
            return a.clone();
        }
        let first = a.crossings[0].exit;
        let last = a.crossings[a.crossings.len() - 1].exit;
        PermissibleArc {
            start: self.canonical_end(first),
            end: self.canonical_end(last.opposite().expect("arc side")),
            ..a.clone()
        }
    }

    fn to_path(&self, a: &PermissibleArc) -> Result<TriPath, Reason> {
        let first = a.crossings[0].exit;
        let (tile, k) = self.tiling.side_location(first);
        if tile != a.start.tile {
            return Err(Reason::BadEnd(format!(
                "the first crossing does not leave tile {}",
                a.start.tile
            )));
        }
        let (start, mut sides) = self.route(tile, a.start.corner, a.start.winding, k);
        for (i, pass) in a.passages.iter().enumerate() {
            let Some((entered, exit)) = self.passage_sides(pass) else {
                return Err(Reason::NoLocalTriangle {
                    position: i + 1,
                    detail: "the corner is not between two arcs".into(),
                });
            };
            if Some(entered) != a.crossings[i].exit.opposite() || exit != a.crossings[i + 1].exit {
                return Err(Reason::NoLocalTriangle {
                    position: i + 1,
                    detail: "the corner does not join the crossed sides".into(),
                });
            }
            sides.extend(self.turn(pass.corner, pass.clockwise));
            sides.push(self.tri_side(exit));
        }
        let last = a.crossings[a.crossings.len() - 1]
            .exit
            .opposite()
            .expect("arc side");
        let (tile, k) = self.tiling.side_location(last);
        if tile != a.end.tile {
            return Err(Reason::BadEnd(format!(
                "the last crossing does not enter tile {}",
                a.end.tile
            )));
        }
        let (end_start, end_sides) = self.route(tile, a.end.corner, a.end.winding, k);
        let back = TriPath {
            start: end_start,
            sides: end_sides,
            end: end_start,
        }
        .reverse();
        debug_assert_eq!(back.sides.first(), sides.last());
        sides.extend_from_slice(&back.sides[1..]);
        Ok(TriPath {
            start,
            sides,
            end: back.end,
        })
    }

    /// Reads the string of a reduced path; fails if a turn is not a local
    /// triangle.
    fn read(&self, c: &TriPath) -> Result<StringWord, Reason> {
        let hits: Vec<usize> = (0..c.sides.len())
            .filter(|&i| self.tiling_side(c.sides[i]).is_some())
            .collect();
        match hits.as_slice() {
            [] => return Ok(StringWord::Zero),
            [i] => {
                let (v, x) = self.trivial_sign(self.tiling_side(c.sides[*i]).expect("tiling arc"));
                return Ok(StringWord::trivial(v, x));
            }
            _ => {}
        }
        let mut letters = Vec::new();
        for (n, w) in hits.windows(2).enumerate() {
            let mut at: Option<(usize, usize)> = None;
            let mut dir: Option<bool> = None;
            for j in w[0]..w[1] {
                let entered = c.sides[j].opposite().expect("arc side");
                let (tile, a) = self.tri.side_location(entered);
                let (tile2, b) = self.tri.side_location(c.sides[j + 1]);
                debug_assert_eq!(tile, tile2);
                let corners = &self.tri.tiles()[tile].corners;
                let (corner, cw) = if b == (a + 1) % 3 {
                    (corners[b], true)
                } else if (b + 1) % 3 == a {
                    (corners[a], false)
                } else {
                    return Err(Reason::NonMinimal("the path doubles back".into()));
                };
                let ok = match (at, dir) {
                    (None, _) => true,
                    (Some((p, i)), Some(d)) => {
                        d == cw
                            && p == corner.point
                            && if cw {
                                corner.index == i + 1
                            } else {
                                corner.index + 1 == i
                            }
                    }
                    _ => false,
                };
                if !ok {
                    return Err(Reason::NoLocalTriangle {
                        position: n + 1,
                        detail: "the curve does not turn around a single corner".into(),
                    });
                }
                at = Some((corner.point, corner.index));
                dir = Some(cw);
            }
            let (p, i) = at.expect("at least one triangle");
            let corner = self
                .tiling_corner(Corner { point: p, index: i })
                .ok_or_else(|| Reason::NoLocalTriangle {
                    position: n + 1,
                    detail: "the turn is around an unmarked boundary".into(),
                })?;
            let arrow = self
                .algebra
                .arrow_at(corner)
                .ok_or_else(|| Reason::NoLocalTriangle {
                    position: n + 1,
                    detail: "the turn passes a boundary segment".into(),
                })?;
            letters.push(Letter {
                arrow,
                inverse: !dir.expect("set with at"),
            });
        }
        validate_string(self.presentation(), &letters)
            .map_err(|e| Reason::NonMinimal(e.to_string()))
    }

    /// Reads an arc through its path in the triangulation.
    pub fn arc_to_string(&self, a: &PermissibleArc) -> Result<StringWord, ArcError> {
        if a.is_trivial() {
            return Ok(StringWord::Zero);
        }
        let path = self.to_path(a).map_err(ArcError::NotPermissible)?;
        let reduced = reduce(&self.tri, path);
        let w = self.read(&reduced).map_err(ArcError::NotPermissible)?;
        if w.is_zero() || w.len() + 1 != a.crossings.len() {
            return Err(ArcError::NotPermissible(Reason::NonMinimal(format!(
                "{} crossings reduce to {}",
                a.crossings.len(),
                reduced
                    .sides
                    .iter()
                    .filter(|s| self.tiling_side(**s).is_some())
                    .count()
            ))));
        }
        Ok(w)
    }

    fn zero_arc(&self, c: &TriPath) -> PermissibleArc {
        let end = |x: Corner| {
            let (tile, corner) = self
                .tiling_corner(x)
                .map(|pc| self.tiling.corner_location(pc))
                .unwrap_or((0, 0));
            EndDescriptor {
                tile,
                corner,
                winding: 0,
            }
        };
        PermissibleArc {
            crossings: vec![],
            passages: vec![],
            start: end(c.start),
            end: end(c.end),
        }
    }

    /// Prepends the boundary segment from the counterclockwise neighbour of
    /// the start point.
    fn rotate_start(&self, c: &TriPath) -> TriPath {
        let s = c.start.point;
        let k = self.tri.fan(s).len();
        let mut sides: Vec<Side> = (c.start.index + 1..=k)
            .rev()
            .map(|j| {
                let slot = self.tri.fan(s)[j - 1];
                Side::Arc {
                    arc: slot.arc,
                    from_end: 1 - slot.end,
                }
            })
            .collect();
        sides.extend_from_slice(&c.sides);
        TriPath {
            start: Corner {
                point: self.tri.prev(s),
                index: 0,
            },
            sides,
            end: c.end,
        }
    }

    fn finish(&self, path: TriPath) -> Result<(PermissibleArc, StringWord), ArcError> {
        let reduced = reduce(&self.tri, path);
        let w = self.read(&reduced).map_err(ArcError::NotPermissible)?;
        let arc = if w.is_zero() {
            self.zero_arc(&reduced)
        } else {
            self.string_to_arc(&w)?
        };
        Ok((arc, w))
    }

    /// Moves one endpoint to its counterclockwise neighbour after bringing
    /// the arc into normal form.
    pub fn pivot(&self, a: &PermissibleArc, end: ArcEnd) -> Result<Pivot, ArcError> {
        if a.is_trivial() {
            return Err(ArcError::ZeroString);
        }
        if end == ArcEnd::End {
            let p = self.pivot(&a.reverse(), ArcEnd::Start)?;
            return Ok(Pivot {
                arc: p.arc.reverse(),
                string: p.string.inverse(),
                case: p.case,
            });
        }
        let a = self.normalize(a);
        let tl = &self.tiling.tiles()[a.start.tile];
        let case = match tl.kind {
            TileKind::TypeI => PivotCase::TypeI,
            TileKind::TypeII => PivotCase::TypeII,
            TileKind::Polygon(_) if tl.sides[a.start.corner].arc().is_some() => PivotCase::Polygon,
            TileKind::Polygon(_) => PivotCase::Cohook,
        };
        let path = self.to_path(&a).map_err(ArcError::NotPermissible)?;
        let (arc, string) = self.finish(self.rotate_start(&path))?;
        Ok(Pivot { arc, string, case })
    }

    /// Rotates both endpoints of the normal form counterclockwise.
    pub fn tau_inverse_arc(&self, a: &PermissibleArc) -> Result<TauInverse, ArcError> {
        if a.is_trivial() {
            return Err(ArcError::ZeroString);
        }
        let path = self
            .to_path(&self.normalize(a))
            .map_err(ArcError::NotPermissible)?;
        let both = self
            .rotate_start(&self.rotate_start(&path).reverse())
            .reverse();
        let (arc, string) = self.finish(both)?;
        Ok(if string.is_zero() {
            TauInverse::Injective
        } else {
            TauInverse::Arc { arc, string }
        })
    }

    /// Accepts a typed arc if some reading of it is permissible.
    pub fn check_permissible(&self, cand: &ArcCandidate) -> Result<PermissibleArc, ArcError> {
        let t = &self.tiling;
        for (end, (_, _, w)) in [("start", &cand.start), ("end", &cand.end)] {
            if *w > 1 {
                return Err(ArcError::NotPermissible(Reason::Winding {
                    end,
                    winding: *w,
                }));
            }
        }
        let arcs: Vec<usize> = cand
            .crossings
            .iter()
            .map(|x| {
                t.arc_index(x)
                    .ok_or_else(|| ArcError::UnknownArc(x.clone()))
            })
            .collect::<Result<_, _>>()?;
        let pivots: Vec<usize> = cand
            .pivots
            .iter()
            .map(|x| {
                t.point_index(x)
                    .ok_or_else(|| ArcError::UnknownPoint(x.clone()))
            })
            .collect::<Result<_, _>>()?;
        if pivots.len() + 1 != arcs.len().max(1) {
            return Err(ArcError::Parse(
                "one pivot point between each two crossings".into(),
            ));
        }
        let point = |name: &str| {
            t.point_index(name)
                .ok_or_else(|| ArcError::UnknownPoint(name.to_string()))
        };
        let (s_tile, s_point, s_wind) = (cand.start.0, point(&cand.start.1)?, cand.start.2);
        let (e_tile, e_point, e_wind) = (cand.end.0, point(&cand.end.1)?, cand.end.2);
        for tile in [s_tile, e_tile] {
            if tile >= t.tiles().len() {
                return Err(ArcError::UnknownTile(format!("T{tile}")));
            }
        }
        for (tile, wind) in [(s_tile, s_wind), (e_tile, e_wind)] {
            if wind > 0 && matches!(t.tiles()[tile].kind, TileKind::Polygon(_)) {
                return Err(ArcError::NotPermissible(Reason::BadEnd(format!(
                    "tile T{tile} has no unmarked boundary to wind around"
                ))));
            }
        }
        let corners_at = |tile: usize, p: usize| -> Vec<usize> {
            let tl = &t.tiles()[tile];
            (0..tl.len())
                .filter(|&i| tl.corners[i].point == p)
                .collect()
        };
        let starts = corners_at(s_tile, s_point);
        let ends = corners_at(e_tile, e_point);
        if starts.is_empty() || ends.is_empty() {
            return Err(ArcError::NotPermissible(Reason::BadEnd(
                "the point is not a corner of the tile".into(),
            )));
        }
        if arcs.is_empty() {
            return Ok(PermissibleArc {
                crossings: vec![],
                passages: vec![],
                start: EndDescriptor {
                    tile: s_tile,
                    corner: starts[0],
                    winding: s_wind,
                },
                end: EndDescriptor {
                    tile: e_tile,
                    corner: ends[0],
                    winding: e_wind,
                },
            });
        }
        let mut readings = Vec::new();
        let mut deepest = (
            0,
            String::from("the first arc is not a side of the start tile"),
        );
        let first: Vec<Side> = t.tiles()[s_tile]
            .sides
            .iter()
            .copied()
            .filter(|s| s.arc() == Some(arcs[0]))
            .collect();
        for exit in first {
            self.extend(
                &arcs,
                &pivots,
                vec![Crossing { arc: arcs[0], exit }],
                vec![],
                &mut readings,
                &mut deepest,
            );
        }
        if readings.is_empty() {
            return Err(ArcError::NotPermissible(Reason::NoLocalTriangle {
                position: deepest.0.max(1),
                detail: deepest.1,
            }));
        }
        let mut last_reason =
            Reason::BadEnd("the last crossing does not enter the end tile".into());
        for (crossings, passages) in readings {
            let last = crossings[crossings.len() - 1]
                .exit
                .opposite()
                .expect("arc side");
            if t.side_location(last).0 != e_tile {
                continue;
            }
            for &sc in &starts {
                for &ec in &ends {
                    let arc = PermissibleArc {
                        crossings: crossings.clone(),
                        passages: passages.clone(),
                        start: EndDescriptor {
                            tile: s_tile,
                            corner: sc,
                            winding: s_wind,
                        },
                        end: EndDescriptor {
                            tile: e_tile,
                            corner: ec,
                            winding: e_wind,
                        },
                    };
                    match self.arc_to_string(&arc) {
                        Ok(_) => return Ok(arc),
                        Err(ArcError::NotPermissible(r)) => last_reason = r,
                        Err(e) => return Err(e),
                    }
                }
            }
        }
        Err(ArcError::NotPermissible(last_reason))
    }

    fn extend(
        &self,
        arcs: &[usize],
        pivots: &[usize],
        crossings: Vec<Crossing>,
        passages: Vec<Passage>,
        out: &mut Vec<(Vec<Crossing>, Vec<Passage>)>,
        deepest: &mut (usize, String),
    ) {
        let i = passages.len();
        if i + 1 == arcs.len() {
            out.push((crossings, passages));
            return;
        }
        let t = &self.tiling;
        let entered = crossings[i].exit.opposite().expect("arc side");
        let (tile, a) = t.side_location(entered);
        let tl = &t.tiles()[tile];
        let m = tl.len();
        let mut found = false;
        for (corner_pos, exit_pos, clockwise) in [
            ((a + 1) % m, (a + 1) % m, true),
            (a, (a + m - 1) % m, false),
        ] {
            let corner = tl.corners[corner_pos];
            let exit = tl.sides[exit_pos];
            if corner.point != pivots[i] || exit.arc() != Some(arcs[i + 1]) {
                continue;
            }
            let pass = Passage {
                tile,
                corner,
                clockwise,
            };
            if self.passage_sides(&pass).is_none() {
                continue;
            }
            found = true;
            let mut c = crossings.clone();
            c.push(Crossing {
                arc: arcs[i + 1],
                exit,
            });
            let mut p = passages.clone();
            p.push(pass);
            self.extend(arcs, pivots, c, p, out, deepest);
        }
        if !found && i + 1 >= deepest.0 {
            *deepest = (
                i + 1,
                format!(
                    "`{}` and `{}` do not meet at `{}` in tile T{tile}",
                    t.arcs()[arcs[i]].id,
                    t.arcs()[arcs[i + 1]].id,
                    t.points()[pivots[i]]
                ),
            );
        }
    }

    pub fn intersection_vector(&self, c: &Curve) -> IntersectionVector {
        let mut counts = vec![0; self.tiling.arcs().len()];
        let crossings = match c {
            Curve::Arc(a) => &a.crossings,
            Curve::Closed(c) => &c.crossings,
        };
        for x in crossings {
            counts[x.arc] += 1;
        }
        IntersectionVector { counts }
    }

    /// The closed curve of `b^n`.
    pub fn band_to_closed_curve(&self, b: &Band, n: usize) -> Result<ClosedCurve, ArcError> {
        if n == 0 {
            return Err(ArcError::ZeroExponent);
        }
        let q = self.presentation().quiver();
        let letters = b.power(n);
        let passages: Vec<Passage> = letters
            .iter()
            .map(|l| {
                let info = &self.algebra.arrows[l.arrow];
                Passage {
                    tile: self.tiling.corner_location(info.corner).0,
                    corner: info.corner,
                    clockwise: !l.inverse,
                }
            })
            .collect();
        let crossings = passages
            .iter()
            .zip(&letters)
            .map(|(p, l)| {
                let (entered, _) = self
                    .passage_sides(p)
                    .expect("arrow corners lie between arcs");
                Crossing {
                    arc: l.source(q),
                    exit: entered.opposite().expect("arc side"),
                }
            })
            .collect();
        let c = ClosedCurve {
            crossings,
            passages,
        };
        self.check_closed_curve(&c)
            .map_err(ArcError::NotPermissible)?;
        Ok(c)
    }

    /// Local triangles for every consecutive pair, including the wrap.
    pub fn check_closed_curve(&self, c: &ClosedCurve) -> Result<(), Reason> {
        let n = c.crossings.len();
        if n == 0 || c.passages.len() != n {
            return Err(Reason::NonMinimal(
                "a closed curve needs one turn per crossing".into(),
            ));
        }
        let t = &self.tiling;
        for i in 0..n {
            let entered = c.crossings[i].exit.opposite().expect("arc side");
            let (tile, a) = t.side_location(entered);
            let tl = &t.tiles()[tile];
            let m = tl.len();
            let pass = &c.passages[i];
            let (corner_pos, exit_pos) = if pass.clockwise {
                ((a + 1) % m, (a + 1) % m)
            } else {
                (a, (a + m - 1) % m)
            };
            let next = c.crossings[(i + 1) % n];
            if pass.tile != tile
                || tl.corners[corner_pos] != pass.corner
                || tl.sides[exit_pos] != next.exit
            {
                return Err(Reason::NoLocalTriangle {
                    position: i + 1,
                    detail: "consecutive crossings do not meet in a corner of the tile".into(),
                });
            }
        }
        Ok(())
    }

    /// The band and exponent of a closed curve.
    pub fn closed_curve_to_band(&self, c: &ClosedCurve) -> Result<(Band, usize), ArcError> {
        self.check_closed_curve(c)
            .map_err(ArcError::NotPermissible)?;
        let letters: Vec<Letter> = c
            .passages
            .iter()
            .map(|p| Letter {
                arrow: self.algebra.arrow_at(p.corner).expect("checked corner"),
                inverse: !p.clockwise,
            })
            .collect();
        let n = letters.len();
        let period = (1..=n)
            .filter(|d| n.is_multiple_of(*d))
            .find(|&d| (0..n).all(|i| letters[i] == letters[i % d]))
            .expect("n is a period");
        let band = Band::new(self.presentation(), &letters[..period]).map_err(|e| match e {
            StringError::NotBand(m) => ArcError::NotBand(m),
            other => ArcError::String(other),
        })?;
        Ok((band, n / period))
    }

    pub fn rep_type(&self) -> Result<RepType, ArcError> {
        match detect_band(self.presentation()) {
            None => Ok(RepType::Finite),
            Some(band) => {
                let witness = self.band_to_closed_curve(&band, 1)?;
                Ok(RepType::Infinite { band, witness })
            }
        }
    }

    /// Hom dimension read from curves: pairs of homotopic segments, the first
    /// leaving anticlockwise-admissibly, the second clockwise-admissibly.
    pub fn hom_dim_geometric(&self, v: &Curve, w: &Curve) -> usize {
        let rv = Reading::of(v);
        let rw = Reading::of(w);
        if rv.arcs.is_empty() || rw.arcs.is_empty() {
            return 0;
        }
        let cap = match (rv.periodic, rw.periodic) {
            (true, true) => rv.turns.len() + rw.turns.len(),
            (false, _) => rv.turns.len(),
            (_, false) => rw.turns.len(),
        };
        let out = rv.segments(true, cap);
        let into = rw.segments(false, cap);
        out.iter()
            .map(|e| into.iter().filter(|f| e.homotopic(f)).count())
            .sum()
    }

    pub fn arc_text(&self, a: &PermissibleArc) -> String {
        let t = &self.tiling;
        let end = |d: &EndDescriptor| {
            let p = t.tiles()[d.tile].corners[d.corner].point;
            format!("T{}@{}/{}", d.tile, t.points()[p], d.winding)
        };
        let mut word = Vec::new();
        for (i, c) in a.crossings.iter().enumerate() {
            word.push(t.arcs()[c.arc].id.clone());
            if let Some(p) = a.passages.get(i) {
                word.push(t.points()[p.corner.point].clone());
            }
        }
        format!("{} : {} : {}", end(&a.start), word.join(" "), end(&a.end))
    }

    pub fn closed_text(&self, c: &ClosedCurve) -> String {
        let t = &self.tiling;
        c.crossings
            .iter()
            .map(|x| t.arcs()[x.arc].id.as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// A curve flattened to its crossed arcs and turns.
struct Reading {
    arcs: Vec<usize>,
    turns: Vec<(Corner, bool)>,
    periodic: bool,
}

struct Segment {
    arcs: Vec<usize>,
    turns: Vec<(Corner, bool)>,
}

impl Segment {
    fn homotopic(&self, other: &Segment) -> bool {
        if self.arcs == other.arcs && self.turns == other.turns {
            return true;
        }
        let arcs: Vec<usize> = other.arcs.iter().rev().copied().collect();
        let turns: Vec<(Corner, bool)> =
            other.turns.iter().rev().map(|&(c, cw)| (c, !cw)).collect();
        self.arcs == arcs && self.turns == turns
    }
}

impl Reading {
    fn of(c: &Curve) -> Reading {
        let (crossings, passages, periodic) = match c {
            Curve::Arc(a) => (&a.crossings, &a.passages, false),
            Curve::Closed(c) => (&c.crossings, &c.passages, true),
        };
        Reading {
            arcs: crossings.iter().map(|x| x.arc).collect(),
            turns: passages.iter().map(|p| (p.corner, p.clockwise)).collect(),
            periodic,
        }
    }

    /// Segments whose flanking turns fit: for `leaving`, anticlockwise
    /// before and clockwise after; otherwise the reverse.
    fn segments(&self, leaving: bool, cap: usize) -> Vec<Segment> {
        let fits = |before: Option<bool>, after: Option<bool>| {
            (before != Some(leaving)) && after.is_none_or(|cw| cw == leaving)
        };
        let mut out = Vec::new();
        if self.periodic {
            let n = self.arcs.len();
            for r in 0..n {
                for len in 0..=cap {
                    let before = self.turns[(r + n - 1) % n].1;
                    let after = self.turns[(r + len) % n].1;
                    if fits(Some(before), Some(after)) {
                        out.push(Segment {
                            arcs: (r..=r + len).map(|i| self.arcs[i % n]).collect(),
                            turns: (r..r + len).map(|i| self.turns[i % n]).collect(),
                        });
                    }
                }
            }
        } else {
            let n = self.arcs.len();
            for i in 0..n {
                for j in i..n {
                    let before = i.checked_sub(1).map(|k| self.turns[k].1);
                    let after = self.turns.get(j).map(|t| t.1);
                    if fits(before, after) {
                        out.push(Segment {
                            arcs: self.arcs[i..=j].to_vec(),
                            turns: self.turns[i..j].to_vec(),
                        });
                    }
                }
            }
        }
        out
    }
}

/// `w_rl` computed from hooks, for comparison with the geometric rotation.
pub fn tau_inverse_string(p: &GentlePresentation, w: &StringWord) -> Result<StringWord, ArcError> {
    Ok(hooks(p, w)?.w_both)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::artheory::{hook_left, hook_right};
    use crate::fixtures;
    use crate::homs::{hom_dim, Host};
    use crate::strings::enumerate_strings;
    use crate::surface::Tiling;

    fn models() -> Vec<(&'static str, ArcModel)> {
        fixtures::tilings()
            .into_iter()
            .map(|(name, t)| (name, ArcModel::new(&t).unwrap()))
            .collect()
    }

    fn strings(m: &ArcModel) -> Vec<StringWord> {
        let mut all = enumerate_strings(m.presentation(), Some(5)).unwrap();
        let inv: Vec<StringWord> = all.iter().map(|w| w.inverse()).collect();
        all.extend(inv);
        all
    }

    #[test]
    fn strings_round_trip() {
        for (name, m) in models() {
            for w in strings(&m) {
                let a = m.string_to_arc(&w).unwrap();
                let back = m.arc_to_string(&a).unwrap_or_else(|e| {
                    panic!("{name} {}: {e}", w.text(m.presentation().quiver()))
                });
                assert_eq!(back, w, "{name} {}", w.text(m.presentation().quiver()));
            }
        }
    }

    #[test]
    fn pivots_are_hooks() {
        for (name, m) in models() {
            let p = m.presentation();
            for w in strings(&m) {
                let a = m.string_to_arc(&w).unwrap();
                let s = m.pivot(&a, ArcEnd::Start).unwrap();
                assert_eq!(
                    s.string,
                    hook_left(p, &w).unwrap().0,
                    "{name} start {}",
                    w.text(p.quiver())
                );
                let e = m.pivot(&a, ArcEnd::End).unwrap();
                assert_eq!(
                    e.string,
                    hook_right(p, &w).unwrap().0,
                    "{name} end {}",
                    w.text(p.quiver())
                );
            }
        }
    }

    #[test]
    fn rotation_is_tau_inverse() {
        for (name, m) in models() {
            let p = m.presentation();
            for w in strings(&m) {
                let a = m.string_to_arc(&w).unwrap();
                let expected = tau_inverse_string(p, &w).unwrap();
                match m.tau_inverse_arc(&a).unwrap() {
                    TauInverse::Injective => {
                        assert!(expected.is_zero(), "{name} {}", w.text(p.quiver()))
                    }
                    TauInverse::Arc { string, .. } => {
                        assert_eq!(string, expected, "{name} {}", w.text(p.quiver()))
                    }
                }
            }
        }
    }

    #[test]
    fn pivot_cases_all_occur() {
        let mut seen = std::collections::BTreeSet::new();
        for (_, m) in models() {
            for w in strings(&m) {
                let a = m.string_to_arc(&w).unwrap();
                for end in [ArcEnd::Start, ArcEnd::End] {
                    seen.insert(format!("{:?}", m.pivot(&a, end).unwrap().case));
                }
            }
        }
        assert_eq!(seen.len(), 4, "{seen:?}");
    }

    #[test]
    fn intersection_vector_is_dimension_vector() {
        for (_, m) in models() {
            let p = m.presentation();
            for w in strings(&m) {
                let v = m.intersection_vector(&Curve::Arc(m.string_to_arc(&w).unwrap()));
                assert_eq!(v.counts, w.dimension_vector(p.quiver()));
            }
        }
    }

    #[test]
    fn kronecker_band_is_a_closed_curve() {
        let m = ArcModel::new(&fixtures::kron()).unwrap();
        let RepType::Infinite { band, witness } = m.rep_type().unwrap() else {
            panic!("the Kronecker tiling has a band")
        };
        assert_eq!(
            m.intersection_vector(&Curve::Closed(witness.clone()))
                .counts,
            vec![1, 1]
        );
        assert_eq!(m.closed_curve_to_band(&witness).unwrap(), (band.clone(), 1));
        let twice = m.band_to_closed_curve(&band, 2).unwrap();
        assert_eq!(m.closed_curve_to_band(&twice).unwrap(), (band, 2));
        assert!(matches!(m.rep_type(), Ok(RepType::Infinite { .. })));
        for (_, other) in models().into_iter().filter(|(n, _)| *n != "kron") {
            assert_eq!(other.rep_type().unwrap(), RepType::Finite);
        }
    }

    #[test]
    fn geometric_homs_match_windows() {
        for (name, m) in models() {
            let p = m.presentation();
            let mut hosts: Vec<(Host, Curve)> = enumerate_strings(p, Some(4))
                .unwrap()
                .into_iter()
                .map(|w| {
                    (
                        Host::String(w.clone()),
                        Curve::Arc(m.string_to_arc(&w).unwrap()),
                    )
                })
                .collect();
            if let Some(b) = detect_band(p) {
                let c = m.band_to_closed_curve(&b, 1).unwrap();
                hosts.push((Host::Band(b), Curve::Closed(c)));
            }
            for (hv, cv) in &hosts {
                for (hw, cw) in &hosts {
                    assert_eq!(
                        m.hom_dim_geometric(cv, cw),
                        hom_dim(p, hv, hw).dim,
                        "{name} {} -> {}",
                        hv.text(p.quiver()),
                        hw.text(p.quiver())
                    );
                }
            }
        }
    }

    #[test]
    fn arc_literals_round_trip() {
        for (name, m) in models() {
            for w in strings(&m) {
                let a = m.string_to_arc(&w).unwrap();
                let text = m.arc_text(&a);
                let cand = ArcCandidate::parse(&text).unwrap();
                let back = m
                    .check_permissible(&cand)
                    .unwrap_or_else(|e| panic!("{name} {text}: {e}"));
                // a literal does not fix the orientation
                assert_eq!(
                    m.arc_to_string(&back).unwrap().canonical(),
                    w.canonical(),
                    "{name} {text}"
                );
            }
        }
    }

    #[test]
    fn winding_twice_is_rejected() {
        let m = ArcModel::new(&fixtures::loop_tiling()).unwrap();
        let w = StringWord::trivial(0, Sign::Plus);
        let text = m
            .arc_text(&m.string_to_arc(&w).unwrap())
            .replace("/1", "/2");
        let err = m
            .check_permissible(&ArcCandidate::parse(&text).unwrap())
            .unwrap_err();
        assert!(
            matches!(
                err,
                ArcError::NotPermissible(Reason::Winding { winding: 2, .. })
            ),
            "{err}"
        );
    }

    #[test]
    fn crossing_without_corner_is_rejected() {
        let t = Tiling::parse(
            "tiling\nboundary b1 marked p1 p2 p3 p4 p5 p6\narc x p1 p3\narc y p4 p6\nfan p1 : x.1\nfan p3 : x.2\nfan p4 : y.1\nfan p6 : y.2\nend\n",
        )
        .unwrap();
        let m = ArcModel::new(&t).unwrap();
        assert_eq!(m.presentation().quiver().arrow_count(), 0);
        let middle = (0..t.tiles().len())
            .find(|&i| t.tiles()[i].len() == 4)
            .unwrap();
        let outer_x = (0..t.tiles().len())
            .find(|&i| {
                i != middle
                    && t.tiles()[i]
                        .corners
                        .iter()
                        .any(|c| t.points()[c.point] == "p2")
            })
            .unwrap();
        let outer_y = (0..t.tiles().len())
            .find(|&i| {
                i != middle
                    && t.tiles()[i]
                        .corners
                        .iter()
                        .any(|c| t.points()[c.point] == "p5")
            })
            .unwrap();
        let text = format!("T{outer_x}@p2 : x p3 y : T{outer_y}@p5");
        let err = m
            .check_permissible(&ArcCandidate::parse(&text).unwrap())
            .unwrap_err();
        assert!(
            matches!(
                err,
                ArcError::NotPermissible(Reason::NoLocalTriangle { .. })
            ),
            "{err}"
        );
    }

    #[test]
    fn zero_string_has_no_arc() {
        let m = ArcModel::new(&fixtures::pent()).unwrap();
        assert_eq!(
            m.string_to_arc(&StringWord::Zero),
            Err(ArcError::ZeroString)
        );
    }
}
