//! Acceptance run: one PASS/FAIL line per criterion. Each criterion runs the
//! library's verification suite and, where one exists, an independent
//! brute-force oracle written here.

#![allow(clippy::needless_range_loop)]

mod common;

use std::collections::{BTreeSet, HashMap, HashSet};
use std::process::ExitCode;
use std::time::Instant;

use baxter_hopf::enumerate::{self, baxter_number};
use baxter_hopf::hopf::drec::product_intrinsic;
use baxter_hopf::hopf::duality::dual_pairing_matrix;
use baxter_hopf::hopf::FreeElement;
use baxter_hopf::lattice::{covers_in_lattice, covers_via_pivots, drec_lattice};
use baxter_hopf::rect::{rho, DiagonalRectangulation};
use baxter_hopf::tree::{rho_b, rho_t};
use baxter_hopf::verify::{self, PIVOT_EXAMPLE};
use common::*;

type Check = Result<(), String>;
type Criterion = (u8, &'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn suite(name: &str) -> Check {
    let rep = verify::run_named(name, None).map_err(|e| e.to_string())?;
    ensure(rep.passed, || format!("suite {name}: {}", rep.failures.join("; ")))
}

fn words(s: &[&str]) -> BTreeSet<Vec<u8>> {
    s.iter().map(|w| perm(w).word().to_vec()).collect()
}

fn c1_counts() -> Check {
    suite("baxter-counts")?;
    let rec = baxter_by_recurrence(9);
    for n in 0..=9 {
        ensure(baxter_number(n) == rec[n].into(), || format!("closed form vs recurrence at n = {n}"))?;
        let tb = all_words(n).iter().filter(|w| naive_twisted_baxter(w)).count();
        let bx = all_words(n).iter().filter(|w| naive_baxter(w)).count();
        ensure(tb as u128 == rec[n] && bx as u128 == rec[n], || {
            format!("naive pattern counts at n = {n}: {tb}, {bx}")
        })?;
    }
    Ok(())
}

fn c2_examples() -> Check {
    suite("worked-examples")?;
    // shuffles from the oracle against the expected sums
    ensure(naive_shuffles(&[2, 1], &[2, 1]) == words(&["2143", "2413", "2431", "4213", "4231", "4321"]), || {
        "21 • 21".into()
    })?;
    let s = naive_shuffles(&[2, 1], &[1, 3, 2]);
    ensure(
        s == words(&["21354", "23154", "23514", "23541", "32154", "32514", "32541", "35214", "35241", "35421"]),
        || "21 • 132".into(),
    )?;
    let tb: BTreeSet<Vec<u8>> = s.into_iter().filter(|w| naive_twisted_baxter(w)).collect();
    ensure(tb == words(&["21354", "23154", "23541", "32154", "32541", "35421"]), || "21 •tB 132".into())?;
    let w = [5u8, 6, 3, 2, 4, 1];
    let splits: BTreeSet<(Vec<u8>, Vec<u8>)> = (0..=6).map(|i| (std_word(&w[..i]), std_word(&w[i..]))).collect();
    let want: BTreeSet<(Vec<u8>, Vec<u8>)> = [
        ("", "563241"),
        ("1", "53241"),
        ("12", "3241"),
        ("231", "231"),
        ("3421", "21"),
        ("45213", "1"),
        ("563241", ""),
    ]
    .iter()
    .map(|(a, b)| (perm(a).word().to_vec(), perm(b).word().to_vec()))
    .collect();
    ensure(splits == want, || "ΔS(563241) splits".into())
}

fn c3_rho_bijection() -> Check {
    suite("rho-bijection")?;
    for n in 0..=5 {
        let tiled = tilings(n);
        let drec: BTreeSet<Vec<_>> = enumerate::drec(n).map_err(|e| e.to_string())?.iter().map(tiling_rects).collect();
        ensure(tiled == drec, || {
            format!("tiling oracle disagrees with ρ(tBax_{n}): {} vs {}", tiled.len(), drec.len())
        })?;
    }
    for x in all_perms(7) {
        let t = rho(&x).tau();
        ensure(naive_twisted_baxter(t.word()), || format!("τρ({x}) = {t} is not twisted Baxter"))?;
        ensure(t.weak_leq(&x).unwrap(), || format!("τρ({x}) = {t} is not below {x}"))?;
    }
    Ok(())
}

fn c4_isomorphism() -> Check {
    suite("hopf-isomorphism")?;
    let r21 = rho(&perm("21"));
    let five = product_intrinsic(&r21, &r21).map_err(|e| e.to_string())?;
    let want = FreeElement::sum_of(["2143", "2431", "4213", "4231", "4321"].iter().map(|s| rho(&perm(s))));
    ensure(five == want, || "ρ(21) • ρ(21)".into())?;
    let six = product_intrinsic(&r21, &rho(&perm("132"))).map_err(|e| e.to_string())?;
    ensure(six.len() == 6 && six.is_multiplicity_free(), || format!("ρ(21) • ρ(132) has {} terms", six.len()))
}

fn c5_coefficients() -> Check {
    suite("coefficient-one")
}

fn c6_pivots() -> Check {
    suite("pivots")?;
    let fig: DiagonalRectangulation = PIVOT_EXAMPLE.parse().map_err(|e: baxter_hopf::Error| e.to_string())?;
    let l = drec_lattice(7).map_err(|e| e.to_string())?;
    let covers = covers_in_lattice(&l, &fig).ok_or("example not in dRec_7")?;
    ensure(covers.down.len() == 5 && covers.up.len() == 3, || "example covers".into())?;
    ensure(covers_via_pivots(&fig) == covers, || "example pivots".into())
}

fn c7_baxter() -> Check {
    suite("baxter-bijection")?;
    for n in 0..=6 {
        let bax: HashSet<Vec<u8>> = all_words(n).into_iter().filter(|w| naive_baxter(w)).collect();
        for r in enumerate::drec(n).map_err(|e| e.to_string())? {
            let b = r.beta();
            ensure(bax.contains(b.word()), || format!("β({r}) = {b} is not Baxter"))?;
        }
    }
    Ok(())
}

fn c8_congruences() -> Check {
    suite("congruence-meet-join")?;
    // fibers of ρ_b, ρ_t, ρ and descent sets give the four partitions
    for n in 0..=7 {
        let all = all_perms(n);
        let len = all.len();
        let pb = partition_by(&all, |x| rho_b(x).encode());
        let pt = partition_by(&all, |x| rho_t(x).encode());
        let pr = partition_by(&all, rho);
        let ps = partition_by(&all, |x| {
            let pos: HashMap<u8, usize> = x.word().iter().enumerate().map(|(i, &v)| (v, i)).collect();
            (1..n as u8).filter(|&a| pos[&(a + 1)] < pos[&a]).collect::<Vec<_>>()
        });
        ensure(meet_partitions(len, &pb, &pt) == pr, || format!("ρ fibers are not the meet at n = {n}"))?;
        ensure(join_partitions(len, &pb, &pt) == ps, || format!("descent classes are not the join at n = {n}"))?;
    }
    Ok(())
}

fn c9_lattice_structure() -> Check {
    suite("rectangulation-lattice")?;
    for n in 1..=7 {
        for r in enumerate::drec(n).map_err(|e| e.to_string())? {
            ensure(corner_count(r) == 2 * n + 2, || format!("{r}: {} corners", corner_count(r)))?;
        }
    }
    for n in 1..=5 {
        let l = drec_lattice(n).map_err(|e| e.to_string())?;
        let mut adj = vec![Vec::new(); l.len()];
        for (a, b) in l.hasse_edges() {
            adj[a].push(b);
            adj[b].push(a);
        }
        ensure(is_k_connected_brute(&adj, n - 1), || format!("dRec_{n} is not {}-connected", n - 1))?;
        // Möbius by the dual recursion μ(x, y) = -Σ_{x < z <= y} μ(z, y)
        let m = l.len();
        let mut mu = vec![vec![0i64; m]; m];
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by_key(|&i| std::cmp::Reverse((0..m).filter(|&j| l.leq(i, j)).count()));
        for y in 0..m {
            for &x in order.iter().rev() {
                if !l.leq(x, y) {
                    continue;
                }
                mu[x][y] = if x == y {
                    1
                } else {
                    -(0..m).filter(|&z| z != x && l.leq(x, z) && l.leq(z, y)).map(|z| mu[z][y]).sum::<i64>()
                };
            }
        }
        ensure(mu == l.moebius(), || format!("Möbius oracle disagrees at n = {n}"))?;
    }
    Ok(())
}

fn c10_pairing() -> Check {
    suite("tbax-pairing")?;
    // entries from ρ fibers instead of congruence moves
    let tb = enumerate::tbax(4).map_err(|e| e.to_string())?;
    let index: HashMap<DiagonalRectangulation, usize> = tb.iter().enumerate().map(|(i, x)| (rho(x), i)).collect();
    let mut m = vec![vec![0i64; tb.len()]; tb.len()];
    for w in all_perms(4) {
        m[index[&rho(&w)]][index[&rho(&w.inverse())]] += 1;
    }
    ensure(m == dual_pairing_matrix(4).map_err(|e| e.to_string())?, || "pairing oracle disagrees".into())?;
    let rows: HashSet<&Vec<i64>> = m.iter().collect();
    ensure(rows.len() < m.len(), || "no repeated row".into())
}

fn c11_axioms() -> Check {
    suite("hopf-axioms")
}

fn c12_duality() -> Check {
    suite("self-duality")?;
    for n in 0..=5 {
        for z in all_words(n) {
            for p in 0..=n {
                let (x, y) = (std_word(&z[..p]), std_word(&z[p..]));
                let (xi, yi) = (perm_words_inverse(&x), perm_words_inverse(&y));
                let zi = perm_words_inverse(&z);
                ensure(naive_shuffles(&xi, &yi).contains(&zi), || format!("z = {z:?}, p = {p}"))?;
            }
        }
    }
    Ok(())
}

fn perm_words_inverse(w: &[u8]) -> Vec<u8> {
    let mut inv = vec![0u8; w.len()];
    for (i, &v) in w.iter().enumerate() {
        inv[v as usize - 1] = i as u8 + 1;
    }
    inv
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        (1, "Baxter counts agree for n <= 9", c1_counts),
        (2, "worked examples reproduced exactly", c2_examples),
        (3, "rho is a bijection tBax_n -> dRec_n with inverse tau", c3_rho_bijection),
        (4, "rho is a Hopf isomorphism; intrinsic = via-rho", c4_isomorphism),
        (5, "coproduct coefficients are 0 or 1", c5_coefficients),
        (6, "lattice covers are pivots; example has 5 down, 3 up", c6_pivots),
        (7, "Bax <-> tBax bijection, beta, order isomorphism", c7_baxter),
        (8, "CTb is the meet and CSub the join of C231, C312", c8_congruences),
        (9, "2n+2 vertices, connectivity, Moebius values", c9_lattice_structure),
        (10, "tBax_4 pairing matrix has identical rows", c10_pairing),
        (11, "Hopf axioms in MR, tBax, Bax, dRec to degree 6", c11_axioms),
        (12, "self-duality coefficient identity for n <= 5", c12_duality),
    ];
    let mut failed = 0;
    for (k, name, f) in criteria {
        let start = Instant::now();
        let res = f();
        let secs = start.elapsed().as_secs_f64();
        match res {
            Ok(()) => println!("criterion {k:>2}: PASS  {name} ({secs:.2}s)"),
            Err(e) => {
                failed += 1;
                println!("criterion {k:>2}: FAIL  {name} ({secs:.2}s): {e}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
