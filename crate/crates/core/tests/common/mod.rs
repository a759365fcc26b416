//! Random tilings of discs and annuli.

use gentle::surface::Tiling;
use rand::seq::SliceRandom;
use rand::Rng;

/// A polygonal region: its corners in clockwise order, by point name.
/// Consecutive corners (cyclically) are joined by a boundary segment or by
/// the closing arc, so only non-adjacent corners get diagonals.
struct Region {
    corners: Vec<usize>,
}

/// `(region corner i, region corner j)` pairs, pairwise non-crossing.
fn random_diagonals<R: Rng>(rng: &mut R, len: usize) -> Vec<(usize, usize)> {
    let mut pairs: Vec<(usize, usize)> = (0..len)
        .flat_map(|i| (i + 2..len).map(move |j| (i, j)))
        .filter(|&(i, j)| !(i == 0 && j == len - 1))
        .collect();
    pairs.shuffle(rng);
    let mut chosen: Vec<(usize, usize)> = Vec::new();
    for (i, j) in pairs {
        let crosses = chosen
            .iter()
            .any(|&(k, l)| (i < k && k < j && j < l) || (k < i && i < l && l < j));
        if !crosses && rng.gen_bool(0.5) {
            chosen.push((i, j));
        }
    }
    chosen
}

/// Fan entries of one region at each of its corners, in clockwise order.
fn region_fans<R: Rng>(
    rng: &mut R,
    region: &Region,
    next_arc: &mut usize,
    arcs: &mut Vec<String>,
) -> Vec<Vec<String>> {
    let len = region.corners.len();
    let diagonals = random_diagonals(rng, len);
    let mut at: Vec<Vec<(usize, String)>> = vec![Vec::new(); len];
    for (i, j) in diagonals {
        let id = format!("d{next_arc}");
        *next_arc += 1;
        arcs.push(format!(
            "arc {id} p{} p{}",
            region.corners[i], region.corners[j]
        ));
        at[i].push(((j + len - i) % len, format!("{id}.1")));
        at[j].push(((i + len - j) % len, format!("{id}.2")));
    }
    at.into_iter()
        .map(|mut v| {
            v.sort();
            v.into_iter().map(|(_, s)| s).collect()
        })
        .collect()
}

fn render(n: usize, unmarked: Option<&str>, arcs: &[String], fans: &[Vec<String>]) -> String {
    let mut out = String::from("tiling\n");
    let points: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
    out.push_str(&format!("boundary b1 marked {}\n", points.join(" ")));
    if let Some(inside) = unmarked {
        out.push_str(&format!("boundary b2 unmarked inside {inside}\n"));
    }
    for a in arcs {
        out.push_str(a);
        out.push('\n');
    }
    for (i, fan) in fans.iter().enumerate() {
        if !fan.is_empty() {
            out.push_str(&format!("fan p{i} : {}\n", fan.join(" ")));
        }
    }
    out.push_str("end\n");
    out
}

/// A disc with 4 to 10 marked points and random diagonals.
pub fn random_disc<R: Rng>(rng: &mut R) -> String {
    let n = rng.gen_range(4..=10);
    let mut arcs = Vec::new();
    let fans = region_fans(
        rng,
        &Region {
            corners: (0..n).collect(),
        },
        &mut 0,
        &mut arcs,
    );
    render(n, None, &arcs, &fans)
}

/// An annulus whose unmarked boundary sits in a type I tile at `p0`.
pub fn random_type_one<R: Rng>(rng: &mut R) -> String {
    let n = rng.gen_range(2..=8);
    let mut arcs = vec!["arc x p0 p0".to_string()];
    let mut corners: Vec<usize> = (0..n).collect();
    corners.push(0);
    let region = Region { corners };
    let per_corner = region_fans(rng, &region, &mut 0, &mut arcs);
    let mut fans = vec![Vec::new(); n];
    for (k, fan) in per_corner.iter().enumerate().take(n).skip(1) {
        fans[k] = fan.clone();
    }
    fans[0] = per_corner[0].clone();
    fans[0].extend(["x.1".to_string(), "x.2".to_string()]);
    fans[0].extend(per_corner[n].iter().cloned());
    render(n, Some("x"), &arcs, &fans)
}

/// An annulus whose unmarked boundary sits in a type II tile between `p0`
/// and `pb`.
pub fn random_type_two<R: Rng>(rng: &mut R) -> String {
    let n = rng.gen_range(4..=9);
    let b = rng.gen_range(2..=n - 2);
    let mut arcs = vec![format!("arc x p0 p{b}"), format!("arc y p0 p{b}")];
    let mut next = 0;
    let a_side = region_fans(
        rng,
        &Region {
            corners: (0..=b).collect(),
        },
        &mut next,
        &mut arcs,
    );
    let mut b_corners: Vec<usize> = (b..n).collect();
    b_corners.push(0);
    let b_side = region_fans(rng, &Region { corners: b_corners }, &mut next, &mut arcs);
    let mut fans = vec![Vec::new(); n];
    fans[1..b].clone_from_slice(&a_side[1..b]);
    fans[b + 1..n].clone_from_slice(&b_side[1..n - b]);
    fans[0] = a_side[0].clone();
    fans[0].extend(["x.1".to_string(), "y.1".to_string()]);
    fans[0].extend(b_side[n - b].iter().cloned());
    fans[b] = b_side[0].clone();
    fans[b].extend(["y.2".to_string(), "x.2".to_string()]);
    fans[b].extend(a_side[b].iter().cloned());
    render(n, Some("x y"), &arcs, &fans)
}

/// One of the three shapes, parsed.
pub fn random_tiling<R: Rng>(rng: &mut R) -> (String, Tiling) {
    let text = match rng.gen_range(0..3) {
        0 => random_disc(rng),
        1 => random_type_one(rng),
        _ => random_type_two(rng),
    };
    let t = Tiling::parse(&text).unwrap_or_else(|e| panic!("{e}\n{text}"));
    (text, t)
}
