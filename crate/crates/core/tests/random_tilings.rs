mod common;

use gentle::algebra::{check_gentle, relation_free_cycle};
use gentle::surface::tiling_algebra;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn random_tilings_give_gentle_algebras() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..200 {
        let (text, t) = common::random_tiling(&mut rng);
        let a = tiling_algebra(&t).unwrap_or_else(|e| panic!("{e}\n{text}"));
        let p = &a.presentation;
        let report = check_gentle(p.quiver(), p.relations()).unwrap();
        assert!(report.is_gentle(), "{report}\n{text}");
        assert_eq!(
            relation_free_cycle(p.quiver(), p.relations()),
            None,
            "{text}"
        );
    }
}

#[test]
fn random_tilings_satisfy_the_arc_dictionary() {
    use gentle::arcs::{ArcEnd, ArcModel, TauInverse};
    use gentle::artheory::{hook_left, hook_right, hooks};
    use gentle::strings::enumerate_strings;

    let mut rng = ChaCha8Rng::seed_from_u64(0xa5c);
    let (mut arcs, mut strings) = (0, 0);
    for _ in 0..100 {
        let (text, t) = common::random_tiling(&mut rng);
        arcs += t.arcs().len();
        let m = ArcModel::new(&t).unwrap();
        let p = m.presentation();
        for w in enumerate_strings(p, Some(4)).unwrap() {
            for w in [w.inverse(), w] {
                strings += 1;
                let label = format!("{}\n{text}", w.text(p.quiver()));
                let a = m.string_to_arc(&w).unwrap();
                assert_eq!(m.arc_to_string(&a).unwrap(), w, "{label}");
                assert_eq!(
                    m.pivot(&a, ArcEnd::Start).unwrap().string,
                    hook_left(p, &w).unwrap().0,
                    "{label}"
                );
                assert_eq!(
                    m.pivot(&a, ArcEnd::End).unwrap().string,
                    hook_right(p, &w).unwrap().0,
                    "{label}"
                );
                let both = hooks(p, &w).unwrap().w_both;
                match m.tau_inverse_arc(&a).unwrap() {
                    TauInverse::Injective => assert!(both.is_zero(), "{label}"),
                    TauInverse::Arc { string, .. } => assert_eq!(string, both, "{label}"),
                }
            }
        }
    }
    assert!(
        arcs > 200 && strings > 1000,
        "{arcs} arcs, {strings} strings"
    );
}
