mod common;

use std::collections::BTreeSet;

use baxter_hopf::congruence::{congruence_class, project_down, CongruenceKind};
use baxter_hopf::enumerate;
use baxter_hopf::hopf::drec::{coproduct_intrinsic, product_intrinsic};
use baxter_hopf::hopf::perms::{mr_delta, mr_mul};
use baxter_hopf::hopf::{
    check_antipode, check_associativity, check_coassociativity, check_compatibility, Bax, DRec, FreeElement,
    GradedHopf, TBax, MR,
};
use baxter_hopf::lattice::{baxter_weak_poset, drec_lattice, tbax_weak_poset};
use baxter_hopf::perm::{self, Permutation};
use baxter_hopf::rect::rho;
use common::*;

use CongruenceKind::CTb;

fn tb_min(x: &Permutation) -> Permutation {
    project_down(x, CTb)
}

#[test]
fn reversals_act_on_mr() {
    for p in 0..=3 {
        for q in 0..=3 {
            for x in all_perms(p) {
                for y in all_perms(q) {
                    let rp = mr_mul(&x, &y).map_keys(Permutation::rp);
                    assert_eq!(rp, mr_mul(&x.rp(), &y.rp()), "rp on {x} • {y}");
                    let rv = mr_mul(&x, &y).map_keys(Permutation::rv);
                    assert_eq!(rv, mr_mul(&y.rv(), &x.rv()), "rv on {x} • {y}");
                }
            }
        }
    }
    for n in 0..=5 {
        for z in all_perms(n) {
            let d = mr_delta(&z.rp());
            assert_eq!(d, mr_delta(&z).map_keys(|(a, b)| (b.rp(), a.rp())), "Δ ∘ rp at {z}");
            let d = mr_delta(&z.rv());
            assert_eq!(d, mr_delta(&z).map_keys(|(a, b)| (a.rv(), b.rv())), "Δ ∘ rv at {z}");
        }
    }
}

#[test]
fn symmetries_of_the_subalgebras() {
    for n in 0..=7 {
        for x in perm::all_permutations(n) {
            if perm::is_twisted_baxter(&x) {
                assert!(perm::is_twisted_baxter(&x.rv().rp()), "{x}");
            }
            if perm::is_baxter(&x) {
                assert!(perm::is_baxter(&x.rv()) && perm::is_baxter(&x.rp()), "{x}");
            }
        }
    }
    // tBax itself is not closed under either reversal alone
    assert!(perm::is_twisted_baxter(&perm("2143")) && !perm::is_twisted_baxter(&perm("2143").rv()));
}

#[test]
fn class_sums_multiply_like_minima() {
    // products of ΘtB class sums in MR are sums of whole classes, indexed
    // by the twisted Baxter product of the minima
    for p in 0..=3 {
        for q in 0..=3 {
            for x in enumerate::tbax(p).unwrap() {
                for y in enumerate::tbax(q).unwrap() {
                    let (cx, cy) = (congruence_class(x, CTb), congruence_class(y, CTb));
                    let mut prod = FreeElement::zero();
                    for a in &cx {
                        for b in &cy {
                            prod = prod + mr_mul(a, b);
                        }
                    }
                    let want = FreeElement::sum_of(TBax.mul_basis(x, y).keys().flat_map(|m| congruence_class(m, CTb)));
                    assert_eq!(prod, want, "[{x}] • [{y}]");
                }
            }
        }
    }
}

#[test]
fn baxter_representatives_give_the_same_algebra() {
    for p in 0..=3 {
        for q in 0..=3 {
            for x in enumerate::bax(p).unwrap() {
                for y in enumerate::bax(q).unwrap() {
                    let lhs = Bax.mul_basis(x, y).map_keys(tb_min);
                    assert_eq!(lhs, TBax.mul_basis(&tb_min(x), &tb_min(y)), "{x} • {y}");
                }
            }
        }
    }
    for n in 0..=5 {
        for x in enumerate::bax(n).unwrap() {
            let lhs = Bax.delta_basis(x).map_keys(|(a, b)| (tb_min(a), tb_min(b)));
            assert_eq!(lhs, TBax.delta_basis(&tb_min(x)), "Δ {x}");
        }
    }
}

#[test]
fn axioms_in_low_degree() {
    for report in [
        check_associativity(&MR, 4).unwrap(),
        check_coassociativity(&MR, 4).unwrap(),
        check_compatibility(&MR, 4).unwrap(),
        check_antipode(&MR, 4).unwrap(),
        check_compatibility(&Bax, 4).unwrap(),
        check_antipode(&TBax, 4).unwrap(),
        check_compatibility(&DRec::INTRINSIC, 4).unwrap(),
        check_antipode(&DRec::INTRINSIC, 4).unwrap(),
    ] {
        assert!(report.ok(), "{report:?}");
    }
}

#[test]
fn antipode_examples() {
    let s = |w: &str| MR.antipode(&FreeElement::basis(perm(w))).unwrap();
    assert_eq!(s("1"), -FreeElement::basis(perm("1")));
    assert_eq!(s("12"), FreeElement::basis(perm("21")));
    assert_eq!(s("21"), FreeElement::basis(perm("12")));
    assert_eq!(s(""), FreeElement::basis(perm("")));
    // the intrinsic antipode on rectangulations is ρ of the twisted one
    for x in enumerate::tbax(3).unwrap() {
        let via = TBax.antipode(&FreeElement::basis(x.clone())).unwrap().map_keys(rho);
        let direct = DRec::INTRINSIC.antipode(&FreeElement::basis(rho(x))).unwrap();
        assert_eq!(via, direct, "S(ρ({x}))");
    }
}

#[test]
fn intrinsic_operations_match_rho_at_degree_five() {
    let d2 = enumerate::drec(2).unwrap();
    for a in d2 {
        for b in enumerate::drec(3).unwrap() {
            let want = TBax.mul_basis(&a.tau(), &b.tau()).map_keys(rho);
            assert_eq!(product_intrinsic(a, b).unwrap(), want, "{a} • {b}");
        }
    }
    for r in enumerate::drec(5).unwrap() {
        let want = TBax.delta_basis(&r.tau()).map_keys(|(x, y)| (rho(x), rho(y)));
        assert_eq!(coproduct_intrinsic(r).unwrap(), want, "Δ {r}");
    }
}

#[test]
fn twisted_baxter_poset_is_a_quotient_lattice() {
    for n in 0..=6 {
        let l = tbax_weak_poset(n).unwrap();
        assert!(l.is_lattice(), "n = {n}");
        let el = l.elements();
        for i in 0..l.len() {
            for j in 0..l.len() {
                let join = tb_min(&el[i].weak_join(&el[j]).unwrap());
                let meet = tb_min(&el[i].weak_meet(&el[j]).unwrap());
                assert_eq!(el[l.join(i, j).unwrap()], join);
                assert_eq!(el[l.meet(i, j).unwrap()], meet);
            }
        }
    }
}

#[test]
fn baxter_poset_is_a_lattice() {
    for n in 0..=6 {
        assert!(baxter_weak_poset(n).unwrap().is_lattice(), "n = {n}");
    }
}

#[test]
fn small_rectangulation_lattice_is_weak_order() {
    let l = drec_lattice(3).unwrap();
    assert_eq!(l.len(), 6);
    let taus: BTreeSet<Permutation> = l.elements().iter().map(|r| r.tau()).collect();
    assert_eq!(taus, all_perms(3).into_iter().collect());
    for i in 0..6 {
        for j in 0..6 {
            let (a, b) = (l.elements()[i].tau(), l.elements()[j].tau());
            assert_eq!(l.leq(i, j), a.weak_leq(&b).unwrap());
        }
    }
    let edges = l.hasse_edges().len();
    assert_eq!(edges, 6);
}
