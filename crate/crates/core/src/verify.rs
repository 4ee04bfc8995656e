//! Exhaustive verification suites, one per claim checked by the acceptance
//! run. Each suite has default size bounds; a cap lowers them.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::hash::Hash;
use std::time::Instant;

use num_bigint::BigUint;
use serde::Serialize;

use crate::congruence::{congruence_class, project_down, project_up, CongruenceKind};
use crate::enumerate::{self, baxter_number};
use crate::error::{Error, Result};
use crate::hopf::drec::{coproduct_intrinsic, coproduct_via_rho, product_intrinsic, product_via_rho};
use crate::hopf::duality::{dual_pairing_matrix, duality_coefficient_check, identical_rows, rank};
use crate::hopf::perms::{mr_delta, mr_mul};
use crate::hopf::{
    check_antipode, check_associativity, check_coassociativity, check_compatibility, coproduct_is_multiplicity_free,
    AxiomReport, Bax, DRec, FreeElement, GradedHopf, TBax, TensorElement, MR,
};
use crate::lattice::{covers_in_lattice, covers_via_pivots, drec_lattice};
use crate::perm::{all_permutations, Permutation};
use crate::rect::{rho, DiagonalRectangulation};

/// A size-7 rectangulation with five lower and three upper covers.
pub const PIVOT_EXAMPLE: &str =
    r#"{"n":7,"rects":[[0,4,1,7],[1,5,7,7],[1,4,7,5],[0,2,4,4],[4,2,7,4],[0,0,6,2],[6,0,7,2]]}"#;

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub criterion: u8,
    pub passed: bool,
    pub checked: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
    pub seconds: f64,
}

pub struct Suite {
    pub name: &'static str,
    pub criterion: u8,
    pub summary: &'static str,
    run: fn(&mut Tally, Option<usize>) -> Result<()>,
}

#[derive(Default)]
pub struct Tally {
    checked: usize,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failures.len() < 20 {
            self.failures.push(msg());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, got: T, want: T, what: &str) {
        let ok = got == want;
        self.check(ok, || format!("{what}: got {got:?}, want {want:?}"));
    }

    fn axioms(&mut self, name: &str, rep: AxiomReport) {
        self.checked += rep.checked;
        for f in rep.failures {
            self.failures.push(format!("{name}: {f}"));
        }
    }

    fn note(&mut self, s: String) {
        self.notes.push(s);
    }
}

fn bound(default: usize, cap: Option<usize>) -> usize {
    cap.map_or(default, |c| c.min(default))
}

pub static SUITES: &[Suite] = &[
    Suite {
        name: "baxter-counts",
        criterion: 1,
        summary: "|tBax_n| = |Bax_n| = |dRec_n| = |twin pairs| = B(n), n <= 9",
        run: baxter_counts,
    },
    Suite {
        name: "worked-examples",
        criterion: 2,
        summary: "known products, coproducts, symmetries and classes",
        run: worked_examples,
    },
    Suite {
        name: "rho-bijection",
        criterion: 3,
        summary: "rho: tBax_n -> dRec_n is a bijection with inverse tau, n <= 8",
        run: rho_bijection,
    },
    Suite {
        name: "hopf-isomorphism",
        criterion: 4,
        summary: "rho is a Hopf map tBax -> dRec; intrinsic = via-rho",
        run: hopf_isomorphism,
    },
    Suite {
        name: "coefficient-one",
        criterion: 5,
        summary: "tBax and dRec coproducts are multiplicity free",
        run: coefficient_one,
    },
    Suite { name: "pivots", criterion: 6, summary: "lattice covers of dRec_n are the pivots, n <= 6", run: pivots },
    Suite {
        name: "baxter-bijection",
        criterion: 7,
        summary: "Bax_n <-> tBax_n via C3412 projections; beta; order isomorphism",
        run: baxter_bijection,
    },
    Suite {
        name: "congruence-meet-join",
        criterion: 8,
        summary: "CTb = C231 meet C312 and CSub = C231 join C312, n <= 7",
        run: congruence_meet_join,
    },
    Suite {
        name: "rectangulation-lattice",
        criterion: 9,
        summary: "2n+2 vertices, connectivity >= n-1, Moebius values in {-1,0,1}",
        run: rectangulation_lattice,
    },
    Suite {
        name: "tbax-pairing",
        criterion: 10,
        summary: "the tBax_4 pairing matrix has two identical rows",
        run: tbax_pairing,
    },
    Suite {
        name: "hopf-axioms",
        criterion: 11,
        summary: "Hopf axioms in MR, tBax, Bax, dRec up to degree 6",
        run: hopf_axioms,
    },
    Suite {
        name: "self-duality",
        criterion: 12,
        summary: "Delta_S coefficients equal inverse product coefficients, n <= 5",
        run: self_duality,
    },
];

pub fn suite(name: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.name == name)
}

pub fn run_suite(s: &Suite, cap: Option<usize>) -> SuiteReport {
    let start = Instant::now();
    let mut t = Tally::default();
    if let Err(e) = (s.run)(&mut t, cap) {
        t.failures.push(format!("error: {e}"));
    }
    SuiteReport {
        suite: s.name,
        criterion: s.criterion,
        passed: t.failures.is_empty(),
        checked: t.checked,
        failures: t.failures,
        notes: t.notes,
        seconds: start.elapsed().as_secs_f64(),
    }
}

pub fn run_named(name: &str, cap: Option<usize>) -> Result<SuiteReport> {
    let s = suite(name).ok_or_else(|| Error::invalid(format!("unknown suite {name:?}")))?;
    Ok(run_suite(s, cap))
}

pub fn run_all(cap: Option<usize>) -> Vec<SuiteReport> {
    SUITES.iter().map(|s| run_suite(s, cap)).collect()
}

fn p(s: &str) -> Permutation {
    s.parse().expect("valid permutation literal")
}

fn sum(words: &[&str]) -> FreeElement<Permutation> {
    FreeElement::sum_of(words.iter().map(|s| p(s)))
}

fn tsum(pairs: &[(&str, &str)]) -> TensorElement<Permutation> {
    FreeElement::sum_of(pairs.iter().map(|(a, b)| (p(a), p(b))))
}

fn baxter_counts(t: &mut Tally, cap: Option<usize>) -> Result<()> {
    for n in 0..=bound(9, cap) {
        let b = baxter_number(n);
        let counts = [
            ("tBax", enumerate::tbax(n)?.len()),
            ("Bax", enumerate::bax(n)?.len()),
            ("dRec", enumerate::count_rho_images(n)?),
            ("twin pairs", enumerate::count_twin_pairs(n)?),
            ("ΘtB minima", enumerate::count_tb_minima(n)?),
        ];
        for (what, c) in counts {
            t.eq(BigUint::from(c), b.clone(), &format!("{what} at n = {n}"));
        }
    }
    Ok(())
}

fn worked_examples(t: &mut Tally, _: Option<usize>) -> Result<()> {
    let s21_132 = sum(&["21354", "23154", "23514", "23541", "32154", "32514", "32541", "35214", "35241", "35421"]);
    t.eq(mr_mul(&p("21"), &p("21")), sum(&["2143", "2413", "2431", "4213", "4231", "4321"]), "21 •S 21");
    t.eq(mr_mul(&p("21"), &p("132")), s21_132.clone(), "21 •S 132");
    let d563241 = tsum(&[
        ("", "563241"),
        ("1", "53241"),
        ("12", "3241"),
        ("231", "231"),
        ("3421", "21"),
        ("45213", "1"),
        ("563241", ""),
    ]);
    t.eq(mr_delta(&p("563241")), d563241.clone(), "ΔS(563241)");
    t.eq(p("625431").rv(), p("152346"), "rv(625431)");
    t.eq(p("624531").rp(), p("135426"), "rp(624531)");

    // rv: algebra antiautomorphism
    t.eq(mr_mul(&p("12").rv(), &p("312").rv()), s21_132.clone(), "rv(12) •S rv(312)");
    let inner = sum(&["45312", "43512", "43152", "43125", "34512", "34152", "34125", "31452", "31425", "31245"]);
    t.eq(inner.map_keys(Permutation::rv), s21_132.clone(), "rv of the expanded sum");
    t.eq(mr_mul(&p("312"), &p("12")), inner, "312 •S 12");
    // rv: coalgebra automorphism
    let d214536 = tsum(&[
        ("", "214536"),
        ("1", "13425"),
        ("21", "2314"),
        ("213", "213"),
        ("2134", "12"),
        ("21453", "1"),
        ("214536", ""),
    ]);
    t.eq(p("214536").rv(), p("563241"), "rv(214536)");
    t.eq(mr_delta(&p("214536")), d214536.clone(), "ΔS(214536)");
    t.eq(d214536.map_keys(|(a, b)| (a.rv(), b.rv())), d563241.clone(), "(rv⊗rv)ΔS(214536)");
    // rp: algebra automorphism
    t.eq(mr_mul(&p("12").rp(), &p("231").rp()), s21_132.clone(), "rp(12) •S rp(231)");
    let inner = sum(&["45312", "45132", "41532", "14532", "45123", "41523", "14523", "41253", "14253", "12453"]);
    t.eq(inner.map_keys(Permutation::rp), s21_132, "rp of the expanded sum");
    t.eq(mr_mul(&p("12"), &p("231")), inner, "12 •S 231");
    // rp: coalgebra antiautomorphism
    let d142365 = tsum(&[
        ("", "142365"),
        ("1", "14235"),
        ("21", "1423"),
        ("132", "132"),
        ("1243", "12"),
        ("31254", "1"),
        ("142365", ""),
    ]);
    t.eq(p("142365").rp(), p("563241"), "rp(142365)");
    t.eq(d142365.map_keys(|(a, b)| (a.rp(), b.rp())), d563241.clone(), "(rp⊗rp) of the listed terms");
    t.eq(mr_delta(&p("142365")).map_keys(|(a, b)| (a.rp(), b.rp())).tw(), d563241, "tw(rp⊗rp)ΔS(142365)");

    t.eq(TBax.mul_basis(&p("21"), &p("21")), sum(&["2143", "2431", "4213", "4231", "4321"]), "21 •tB 21");
    t.eq(
        TBax.mul_basis(&p("21"), &p("132")),
        sum(&["21354", "23154", "23541", "32154", "32541", "35421"]),
        "21 •tB 132",
    );
    let class: BTreeSet<Permutation> = ["532641", "536241", "563241"].iter().map(|s| p(s)).collect();
    t.eq(congruence_class(&p("532641"), CongruenceKind::CTb), class, "ΘtB-class of 532641");
    let dtb = tsum(&[
        ("", "532641"),
        ("1", "53241"),
        ("1", "32541"),
        ("12", "3241"),
        ("21", "4231"),
        ("21", "2431"),
        ("213", "231"),
        ("231", "231"),
        ("321", "321"),
        ("3421", "21"),
        ("3241", "21"),
        ("3214", "21"),
        ("42153", "1"),
        ("532641", ""),
    ]);
    t.eq(TBax.coproduct(&FreeElement::basis(p("532641")))?, dtb, "ΔtB(532641)");
    Ok(())
}

fn rho_bijection(t: &mut Tally, cap: Option<usize>) -> Result<()> {
    for n in 0..=bound(8, cap) {
        let tbax = enumerate::tbax(n)?;
        let images: HashSet<DiagonalRectangulation> = tbax.iter().map(rho).collect();
        t.eq(images.len(), tbax.len(), &format!("ρ injective on tBax_{n}"));
        let mut all_images = HashSet::new();
        let mut bad_tau = 0;
        for x in all_permutations(n) {
            let r = rho(&x);
            if r.tau() != project_down(&x, CongruenceKind::CTb) {
                bad_tau += 1;
            }
            all_images.insert(r);
        }
        t.eq(bad_tau, 0, &format!("τ∘ρ = π↓ on S_{n}, mismatches"));
        t.check(all_images == images, || format!("ρ(tBax_{n}) = ρ(S_{n})"));
        for x in tbax {
            let r = rho(x);
            t.check(r.tau() == *x, || format!("τ(ρ({x})) = {x}"));
            t.check(rho(&r.tau()) == r, || format!("ρ(τ(R)) = R for R = ρ({x})"));
        }
    }
    Ok(())
}

fn hopf_isomorphism(t: &mut Tally, cap: Option<usize>) -> Result<()> {
    let pmax = bound(7, cap);
    for total in 0..=pmax {
        for pd in 0..=total {
            for x in enumerate::tbax(pd)? {
                let rx = rho(x);
                for y in enumerate::tbax(total - pd)? {
                    let ry = rho(y);
                    let via = TBax.mul_basis(x, y).map_keys(rho);
                    let intrinsic = product_intrinsic(&rx, &ry)?;
                    t.check(via == intrinsic, || format!("ρ(x •tB y) = ρx • ρy for x = {x}, y = {y}"));
                    t.check(product_via_rho(&rx, &ry) == intrinsic, || {
                        format!("product implementations disagree on {x}, {y}")
                    });
                }
            }
        }
    }
    for n in 0..=bound(6, cap) {
        for x in enumerate::tbax(n)? {
            let r = rho(x);
            let via = TBax.delta_basis(x).map_keys(|(a, b)| (rho(a), rho(b)));
            let intrinsic = coproduct_intrinsic(&r)?;
            t.check(via == intrinsic, || format!("(ρ⊗ρ)ΔtB(x) = Δ(ρx) for x = {x}"));
            t.check(coproduct_via_rho(&r) == intrinsic, || format!("coproduct implementations disagree on ρ({x})"));
        }
    }
    Ok(())
}

fn coefficient_one(t: &mut Tally, cap: Option<usize>) -> Result<()> {
    for n in 0..=bound(7, cap) {
        t.check(coproduct_is_multiplicity_free(&TBax, n)?, || format!("ΔtB multiplicity free on tBax_{n}"));
    }
    for n in 0..=bound(6, cap) {
        t.check(coproduct_is_multiplicity_free(&DRec::INTRINSIC, n)?, || format!("Δ multiplicity free on dRec_{n}"));
    }
    Ok(())
}

fn pivots(t: &mut Tally, cap: Option<usize>) -> Result<()> {
    for n in 0..=bound(6, cap) {
        let l = drec_lattice(n)?;
        for r in l.elements() {
            let want = covers_in_lattice(&l, r).expect("element of the lattice");
            t.check(covers_via_pivots(r) == want, || format!("pivots of {r} differ from lattice covers"));
        }
    }
    let fig: DiagonalRectangulation = PIVOT_EXAMPLE.parse()?;
    let piv = covers_via_pivots(&fig);
    t.eq((piv.down.len(), piv.up.len()), (5, 3), "pivot example (down, up)");
    if cap.is_none_or(|c| c >= 7) {
        let l = drec_lattice(7)?;
        let lat = covers_in_lattice(&l, &fig).expect("example is in dRec_7");
        t.eq((lat.down.len(), lat.up.len()), (5, 3), "pivot example lattice covers (down, up)");
    }
    Ok(())
}

fn baxter_bijection(t: &mut Tally, cap: Option<usize>) -> Result<()> {
    for n in 0..=bound(8, cap) {
        let tbax: HashSet<&Permutation> = enumerate::tbax(n)?.iter().collect();
        let mut images = HashSet::new();
        for x in enumerate::bax(n)? {
            let y = project_down(x, CongruenceKind::C3412);
            t.check(tbax.contains(&y), || format!("π↓3412({x}) = {y} is twisted Baxter"));
            t.check(project_up(&y, CongruenceKind::C3412) == *x, || format!("π↑3412(π↓3412({x})) = {x}"));
            images.insert(y);
        }
        t.eq(images.len(), tbax.len(), &format!("π↓3412 onto tBax_{n}"));
        for r in enumerate::drec(n)? {
            let beta = r.beta();
            t.check(beta == project_up(&r.tau(), CongruenceKind::C3412), || format!("β = π↑3412∘τ on {r}"));
            t.check(rho(&beta) == *r, || format!("ρ(β(R)) = R on {r}"));
        }
    }
    for n in 0..=bound(7, cap) {
        let l = drec_lattice(n)?;
        let bax = enumerate::bax(n)?;
        let idx: Vec<usize> = bax.iter().map(|x| l.index_of(&rho(x)).expect("ρ lands in dRec_n")).collect();
        t.eq(idx.iter().collect::<HashSet<_>>().len(), l.len(), &format!("ρ bijective Bax_{n} -> dRec_{n}"));
        let masks: Vec<u128> = bax.iter().map(|x| x.inversion_mask().expect("small n")).collect();
        let mut bad = 0;
        for i in 0..bax.len() {
            for j in 0..bax.len() {
                if (masks[i] & !masks[j] == 0) != l.leq(idx[i], idx[j]) {
                    bad += 1;
                }
            }
        }
        t.eq(bad, 0, &format!("ρ order isomorphism on Bax_{n}, mismatched pairs"));
    }
    Ok(())
}

/// True when the two key functions induce the same partition of `items`.
fn same_partition<A: Eq + Hash, B: Eq + Hash>(
    items: &[Permutation],
    f: impl Fn(&Permutation) -> A,
    g: impl Fn(&Permutation) -> B,
) -> bool {
    let mut fg: HashMap<A, usize> = HashMap::new();
    let mut gf: HashMap<B, usize> = HashMap::new();
    let mut pairs = HashSet::new();
    for x in items {
        let (a, b) = (f(x), g(x));
        let na = fg.len();
        let ia = *fg.entry(a).or_insert(na);
        let nb = gf.len();
        let ib = *gf.entry(b).or_insert(nb);
        pairs.insert((ia, ib));
    }
    pairs.len() == fg.len() && pairs.len() == gf.len()
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn congruence_meet_join(t: &mut Tally, cap: Option<usize>) -> Result<()> {
    use CongruenceKind::*;
    for n in 0..=bound(7, cap) {
        let all: Vec<Permutation> = all_permutations(n).collect();
        let meet = same_partition(&all, |x| project_down(x, CTb), |x| (project_down(x, C231), project_down(x, C312)));
        t.check(meet, || format!("ΘtB = Θ231 ∧ Θ312 on S_{n}"));
        let index: HashMap<&Permutation, usize> = all.iter().enumerate().map(|(i, x)| (x, i)).collect();
        let mut parent: Vec<usize> = (0..all.len()).collect();
        for (i, x) in all.iter().enumerate() {
            for k in [C231, C312] {
                let (a, b) = (find(&mut parent, i), find(&mut parent, index[&project_down(x, k)]));
                parent[a] = b;
            }
        }
        let roots: Vec<usize> = (0..all.len()).map(|i| find(&mut parent, i)).collect();
        let join = same_partition(&all, |x| roots[index[x]], |x| project_down(x, CSub));
        t.check(join, || format!("Θsub = Θ231 ∨ Θ312 on S_{n}"));
    }
    Ok(())
}

fn rectangulation_lattice(t: &mut Tally, cap: Option<usize>) -> Result<()> {
    for n in 1..=bound(7, cap) {
        for r in enumerate::drec(n)? {
            let v = r.vertices().len();
            t.check(v == 2 * n + 2, || format!("{r} has {v} vertices, want {}", 2 * n + 2));
        }
    }
    for n in 1..=bound(5, cap) {
        let l = drec_lattice(n)?;
        let k = l.connectivity();
        t.check(k + 1 >= n, || format!("dRec_{n} Hasse graph connectivity {k} < {}", n - 1));
        t.note(format!("connectivity of dRec_{n}: {k}"));
        let mu = l.moebius();
        let bad = mu.iter().flatten().filter(|v| !(-1..=1).contains(*v)).count();
        t.eq(bad, 0, &format!("Möbius values of dRec_{n} outside {{-1, 0, 1}}"));
    }
    Ok(())
}

fn tbax_pairing(t: &mut Tally, _: Option<usize>) -> Result<()> {
    let m4 = dual_pairing_matrix(4)?;
    t.eq((m4.len(), m4.first().map_or(0, Vec::len)), (22, 22), "pairing matrix shape");
    let same = identical_rows(&m4);
    t.check(!same.is_empty(), || "no identical rows in the tBax_4 pairing matrix".into());
    let tb = enumerate::tbax(4)?;
    for (i, j) in &same {
        t.note(format!("identical rows: {} and {}", tb[*i], tb[*j]));
    }
    t.note(format!("rank at n = 4: {} of 22", rank(&m4)));
    let m3 = dual_pairing_matrix(3)?;
    t.note(format!("rank at n = 3: {} of {}", rank(&m3), m3.len()));
    Ok(())
}

fn axioms_for<H: GradedHopf>(t: &mut Tally, h: &H, deg: usize) -> Result<()> {
    let name = h.name();
    t.axioms(name, check_associativity(h, deg)?);
    t.axioms(name, check_coassociativity(h, deg)?);
    t.axioms(name, check_compatibility(h, deg)?);
    t.axioms(name, check_antipode(h, deg)?);
    Ok(())
}

fn hopf_axioms(t: &mut Tally, cap: Option<usize>) -> Result<()> {
    let d = bound(6, cap);
    axioms_for(t, &MR, d)?;
    axioms_for(t, &TBax, d)?;
    axioms_for(t, &Bax, d)?;
    axioms_for(t, &DRec::INTRINSIC, d)?;
    Ok(())
}

fn self_duality(t: &mut Tally, cap: Option<usize>) -> Result<()> {
    for n in 0..=bound(5, cap) {
        t.check(duality_coefficient_check(n)?, || format!("duality identity fails at n = {n}"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique() {
        let names: HashSet<_> = SUITES.iter().map(|s| s.name).collect();
        assert_eq!(names.len(), 12);
        assert!(suite("pivots").is_some());
        assert!(run_named("nope", None).is_err());
    }

    #[test]
    fn small_runs() {
        for s in SUITES {
            let rep = run_suite(s, Some(3));
            assert!(rep.passed, "{}: {:?}", s.name, rep.failures);
        }
    }
}
