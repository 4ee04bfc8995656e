use baxter_hopf::congruence::{project_down, project_up, CongruenceKind};
use baxter_hopf::perm::{self, standardize, Permutation};
use baxter_hopf::rect::{rho, DiagonalRectangulation};
use baxter_hopf::render;
use proptest::prelude::*;
use proptest::sample::select;

fn arb_perm(max: usize) -> impl Strategy<Value = Permutation> {
    (0..=max)
        .prop_flat_map(|n| Just((1..=n as u8).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|w| Permutation::new(w).unwrap())
}

fn pair(max: usize) -> impl Strategy<Value = (Permutation, Permutation)> {
    (0..=max)
        .prop_flat_map(|n| {
            let w: Vec<u8> = (1..=n as u8).collect();
            (Just(w.clone()).prop_shuffle(), Just(w).prop_shuffle())
        })
        .prop_map(|(a, b)| (Permutation::new(a).unwrap(), Permutation::new(b).unwrap()))
}

fn kind() -> impl Strategy<Value = CongruenceKind> {
    select(CongruenceKind::ALL.to_vec())
}

proptest! {
    #[test]
    fn involutions(x in arb_perm(12)) {
        prop_assert_eq!(x.inverse().inverse(), x.clone());
        prop_assert_eq!(x.rv().rv(), x.clone());
        prop_assert_eq!(x.rp().rp(), x.clone());
        prop_assert_eq!(x.rv().rp(), x.rp().rv());
    }

    #[test]
    fn standardize_keeps_relative_order(seq in prop::collection::vec(-1000i32..1000, 0..12)) {
        let mut s = seq.clone();
        s.sort();
        s.dedup();
        prop_assume!(s.len() == seq.len());
        let p = standardize(&seq).unwrap();
        for i in 0..seq.len() {
            for j in 0..seq.len() {
                prop_assert_eq!(seq[i] < seq[j], p.word()[i] < p.word()[j]);
            }
        }
    }

    #[test]
    fn projections_are_idempotent_bounds(x in arb_perm(9), k in kind()) {
        let d = project_down(&x, k);
        let u = project_up(&x, k);
        prop_assert!(d.weak_leq(&x).unwrap() && x.weak_leq(&u).unwrap());
        prop_assert_eq!(project_down(&d, k), d.clone());
        prop_assert_eq!(project_up(&u, k), u.clone());
        prop_assert_eq!(project_down(&u, k), d);
    }

    #[test]
    fn weak_join_and_meet_are_bounds((x, y) in pair(9)) {
        let j = x.weak_join(&y).unwrap();
        let m = x.weak_meet(&y).unwrap();
        prop_assert!(x.weak_leq(&j).unwrap() && y.weak_leq(&j).unwrap());
        prop_assert!(m.weak_leq(&x).unwrap() && m.weak_leq(&y).unwrap());
        prop_assert_eq!(x.inversion_set().to_permutation().unwrap(), x.clone());
        // absorption
        prop_assert_eq!(x.weak_join(&m).unwrap(), x.clone());
        prop_assert_eq!(x.weak_meet(&j).unwrap(), x);
    }

    #[test]
    fn text_round_trips(x in arb_perm(14)) {
        prop_assert_eq!(x.to_string().parse::<Permutation>().unwrap(), x.clone());
        let json = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<Permutation>(&json).unwrap(), x);
    }

    #[test]
    fn rectangulation_round_trips(x in arb_perm(9)) {
        let r = rho(&x);
        prop_assert_eq!(r.to_string().parse::<DiagonalRectangulation>().unwrap(), r.clone());
        prop_assert_eq!(render::parse_svg(&render::svg(&r)).unwrap(), r.clone());
        prop_assert_eq!(rho(&r.tau()), r.clone());
        prop_assert!(perm::is_twisted_baxter(&r.tau()));
        prop_assert!(perm::is_baxter(&r.beta()));
        prop_assert_eq!(rho(&r.beta()), r.clone());
        prop_assert_eq!(r.reflect_antidiagonal().reflect_antidiagonal(), r);
    }

    #[test]
    fn rho_is_constant_on_tb_classes(x in arb_perm(9)) {
        prop_assert_eq!(rho(&x), rho(&project_down(&x, CongruenceKind::CTb)));
        prop_assert_eq!(rho(&x), rho(&project_up(&x, CongruenceKind::CTb)));
    }
}
