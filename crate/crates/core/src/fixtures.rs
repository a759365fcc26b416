//! Small algebras and tilings used throughout the tests and demos.

use crate::algebra::GentlePresentation;
use crate::surface::Tiling;

fn build(
    vertices: &[&str],
    arrows: &[(&str, &str, &str)],
    relations: &[(&str, &str)],
) -> GentlePresentation {
    GentlePresentation::from_ids(vertices, arrows, relations).expect("fixture is gentle")
}

/// Three vertices, `a: 1 -> 2`, `b: 2 -> 1`, `c: 2 -> 3`, loop `d` at 3;
/// relations `ab`, `ba`, `dd`.
pub fn fix_a() -> GentlePresentation {
    build(
        &["1", "2", "3"],
        &[
            ("a", "1", "2"),
            ("b", "2", "1"),
            ("c", "2", "3"),
            ("d", "3", "3"),
        ],
        &[("a", "b"), ("b", "a"), ("d", "d")],
    )
}

/// Four vertices, `a: 3 -> 1`, `b: 1 -> 2`, `c: 2 -> 3`, `d: 3 -> 4`;
/// relations `ca`, `ab`.
pub fn fix_b() -> GentlePresentation {
    build(
        &["1", "2", "3", "4"],
        &[
            ("a", "3", "1"),
            ("b", "1", "2"),
            ("c", "2", "3"),
            ("d", "3", "4"),
        ],
        &[("c", "a"), ("a", "b")],
    )
}

pub fn a2() -> GentlePresentation {
    build(&["1", "2"], &[("a", "1", "2")], &[])
}

pub fn kronecker() -> GentlePresentation {
    build(&["1", "2"], &[("a", "1", "2"), ("b", "1", "2")], &[])
}

/// One vertex `v` with a loop `d` and `dd = 0`.
pub fn loop_algebra() -> GentlePresentation {
    build(&["v"], &[("d", "v", "v")], &[("d", "d")])
}

/// All algebra fixtures with their names.
pub fn algebras() -> Vec<(&'static str, GentlePresentation)> {
    vec![
        ("fix-a", fix_a()),
        ("fix-b", fix_b()),
        ("a2", a2()),
        ("loop", loop_algebra()),
        ("kronecker", kronecker()),
    ]
}

pub const PENT: &str = "\
tiling
boundary b1 marked p1 p2 p3 p4 p5
arc x p1 p3
arc y p1 p4
fan p1 : x.1 y.1
fan p3 : x.2
fan p4 : y.2
end
";

pub const LOOP: &str = "\
tiling
boundary b1 marked p q
boundary b2 unmarked inside x
arc x p p
fan p : x.1 x.2
end
";

pub const KRON: &str = "\
tiling
boundary b1 marked p
boundary b2 marked q
arc x p q
arc y p q
fan p : x.1 y.1
fan q : x.2 y.2
end
";

/// Two arcs around an unmarked boundary, on an outer boundary with four
/// points so that the outer tiles are proper polygons.
pub const DIGON: &str = "\
tiling
boundary b1 marked p r q s
boundary b2 unmarked inside x y
arc x p q
arc y p q
fan p : x.1 y.1
fan q : y.2 x.2
end
";

fn tiling(text: &str) -> Tiling {
    Tiling::parse(text).expect("fixture tiling is valid")
}

pub fn pent() -> Tiling {
    tiling(PENT)
}

pub fn loop_tiling() -> Tiling {
    tiling(LOOP)
}

pub fn kron() -> Tiling {
    tiling(KRON)
}

pub fn digon() -> Tiling {
    tiling(DIGON)
}

/// All tiling fixtures with their names.
pub fn tilings() -> Vec<(&'static str, Tiling)> {
    vec![
        ("pent", pent()),
        ("loop", loop_tiling()),
        ("kron", kron()),
        ("digon", digon()),
    ]
}
