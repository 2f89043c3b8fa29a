//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use detsurf::arith::binom;
use detsurf::cohomology::{
    build_resolution, closed_form_check, component_report, component_table, curve_degree_genus, curve_h0_h1, dim_det,
    h0_oxc, hilbert_dim, ideal_h0, verify_conjecture,
};
use detsurf::ff_oracle::{fermat_check, fermat_matrix, fermat_polynomial, jacobian_rank, PrimeField, DEFAULT_MODULUS};
use detsurf::nl_lattice::{expand_divisor, mu, nl_number, quartic_divisor_degrees, LatticeInvariants};
use detsurf::pairs::{enumerate_classes, normalized_pairs};
use detsurf::{AdmissiblePair, Result};

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, &'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn within(elapsed: Duration, limit: Duration) -> std::result::Result<(), String> {
    ensure(elapsed <= limit, || format!("took {:.1?}, limit {:?}", elapsed, limit))
}

/// Codimension rows as printed, in `k:r` notation.
const TABLE: [(i64, &str, usize); 7] = [
    (3, "0", 1),
    (4, "5:1", 5),
    (5, "2, 3, 6:4", 8),
    (6, "3, 5, 6, 7, 8, 2:9, 9:10", 16),
    (7, "4, 7, 9, 10, 12, 14, 15, 2:16, 17, 2:18, 2:19, 11:20", 25),
    (8, "5, 9, 12, 2:13, 16, 19, 21, 22, 2:23, 24, 26, 27, 28, 2:29, 2:30, 3:31, 2:32, 3:33, 3:34, 14:35", 44),
    (
        9,
        "6, 11, 15, 16, 17, 20, 24, 27, 28, 30, 2:31, 32, 34, 36, 37, 39, 40, 2:41, 42, \
         2:43, 44, 45, 2:46, 47, 2:48, 2:49, 4:50, 2:51, 4:52, 2:53, 4:54, 3:55, 17:56",
        68,
    ),
];

fn expand_notation(s: &str) -> Vec<i128> {
    let mut out = Vec::new();
    for item in s.split(',').map(str::trim) {
        match item.split_once(':') {
            Some((k, r)) => out.extend(std::iter::repeat_n(r.parse::<i128>().unwrap(), k.parse().unwrap())),
            None => out.push(item.parse().unwrap()),
        }
    }
    out.sort_unstable();
    out
}

fn ac1_table() -> Check {
    let start = Instant::now();
    for (d, printed, count) in TABLE {
        let row = lib(component_table(d))?;
        let expect = expand_notation(printed);
        ensure(expect.len() == count, || format!("d={d}: printed row has {} entries", expect.len()))?;
        ensure(row.count == count, || format!("d={d}: {} components, expected {count}", row.count))?;
        ensure(row.codims == expect, || format!("d={d}: codims {:?}", row.codims))?;
        ensure(row.notation() == printed, || format!("d={d}: notation {}", row.notation()))?;
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(5))?;
    Ok(format!("d=3..9 counts 1,5,8,16,25,44,68 and multisets exact ({elapsed:.2?})"))
}

fn ac2_quartics() -> Check {
    let expect = [
        ("F1", 14, 23, 20, 320112),
        ("F2", 17, 35, 17, 136512),
        ("F3", 16, 31, 16, 38475),
        ("F4", 17, 36, 9, 320),
        ("F5", 18, 40, 12, 2508),
    ];
    let got = lib(quartic_divisor_degrees())?;
    ensure(got.len() == 5, || format!("{} divisors", got.len()))?;
    for (q, (label, dc, gc, delta, degree)) in got.iter().zip(expect) {
        let row = (q.label.as_str(), q.curve_degree, q.curve_genus, q.delta, q.degree);
        ensure(row == (label, dc, gc, delta, degree), || {
            format!("{row:?}, expected {:?}", (label, dc, gc, delta, degree))
        })?;
    }
    Ok("degrees 320112, 136512, 38475, 320, 2508 with (d_C, g_C, delta) as tabulated".into())
}

fn ac3_worked_identity() -> Check {
    let f3 = LatticeInvariants::new(16, 0).map_err(|e| e.to_string())?;
    let m = lib(mu(31, 16, f3))?;
    ensure(m == 2, || format!("mu(31,16|16,0) = {m}"))?;
    let nl_top = lib(nl_number(31, 16))?;
    let nl_low = lib(nl_number(1, 2))?;
    ensure((nl_top, nl_low) == (76950, 0), || format!("NL(31,16) = {nl_top}, NL(1,2) = {nl_low}"))?;
    let expansion = lib(expand_divisor(31, 16))?;
    let lower: Vec<_> = expansion.terms.iter().filter(|(inv, _)| **inv != f3).collect();
    for (inv, _) in &lower {
        ensure(inv.delta <= 4, || format!("unexpected lower term {inv:?}"))?;
    }
    let deg = (nl_top - nl_low) / 2;
    ensure(deg == 38475, || format!("half difference {deg}"))?;
    let f3_deg = lib(quartic_divisor_degrees())?[2].degree;
    ensure(f3_deg == deg, || format!("pipeline gives {f3_deg}"))?;
    Ok(format!("(76950 - 0)/2 = {deg}, mu(31,16|16,0) = {m}"))
}

fn ac4_closed_forms() -> Check {
    for d in 3..=12i64 {
        let n = d as usize;
        let linear = lib(AdmissiblePair::new(vec![0; n], vec![1; n]))?;
        let dim = lib(dim_det(&linear))?;
        let d = i128::from(d);
        ensure(dim == 2 * d * d + 1, || format!("linear d={d}: dim {dim}"))?;
    }
    for d in 5..=12i64 {
        let line = lib(AdmissiblePair::new(vec![0, 0], vec![1, d - 1]))?;
        let conic = lib(AdmissiblePair::new(vec![0, 1], vec![2, d - 1]))?;
        let (cl, cc) = (lib(component_report(&line))?.codim, lib(component_report(&conic))?.codim);
        let d = i128::from(d);
        ensure(cl == d - 3, || format!("line d={d}: codim {cl}"))?;
        ensure(cc == 2 * d - 7, || format!("conic d={d}: codim {cc}"))?;
    }
    Ok("linear 2d^2+1 (d=3..12), line d-3 and conic 2d-7 (d=5..12)".into())
}

fn ac5_extremal() -> Check {
    let start = Instant::now();
    let mut cells = 0;
    for d in 2..=28i64 {
        for t in 2..=d as usize {
            let c = lib(closed_form_check(d, t))?;
            ensure(c.ok, || format!("{c:?}"))?;
            if t == d as usize {
                ensure(c.max_codim == binom(d - 1, 3), || format!("t=d branch at d={d}: {}", c.max_codim))?;
            }
            cells += 1;
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(60))?;
    Ok(format!("{cells} cells with 2 <= t <= d <= 28 ({elapsed:.2?})"))
}

fn ac6_conjecture() -> Check {
    let start = Instant::now();
    let report = lib(verify_conjecture(28))?;
    let elapsed = start.elapsed();
    let bad: Vec<_> = report.cells.iter().filter(|c| !c.passed()).map(|c| (c.d, c.t)).collect();
    ensure(bad.is_empty(), || format!("failing cells {bad:?}"))?;
    within(elapsed, Duration::from_secs(600))?;
    Ok(format!("{} classes for d <= 28 ({elapsed:.2?})", report.total_classes()))
}

fn ac7_oracle() -> Check {
    let start = Instant::now();
    let mut classes: Vec<AdmissiblePair> = Vec::new();
    for d in [3, 4] {
        classes.extend(lib(enumerate_classes(d))?.into_iter().map(|c| c.representative));
    }
    classes.extend(lib(enumerate_classes(5))?.into_iter().filter(|c| c.len() == 2).map(|c| c.representative));
    let mut matched = 0;
    let mut misses = Vec::new();
    for p in &classes {
        let expect = lib(dim_det(p))?;
        let mut ok = true;
        for seed in [1, 2, 3] {
            let got = lib(jacobian_rank(p, DEFAULT_MODULUS, seed))?.dim();
            if got != expect {
                ok = false;
                misses.push(format!("{p} seed {seed}: {got} vs {expect}"));
            }
        }
        matched += usize::from(ok);
    }
    let elapsed = start.elapsed();
    // at least 8 of every 9 classes must match on all seeds
    ensure(9 * matched >= 8 * classes.len(), || format!("{matched}/{} classes match: {misses:?}", classes.len()))?;
    within(elapsed, Duration::from_secs(60))?;
    Ok(format!("{matched}/{} classes match on seeds 1,2,3 mod {DEFAULT_MODULUS} ({elapsed:.2?})", classes.len()))
}

fn ac8_fermat() -> Check {
    let mut checked = 0;
    for d in 4..=8i64 {
        let modulus = detsurf::ff_oracle::default_fermat_modulus(d as u32);
        let target = fermat_polynomial(lib(PrimeField::new(modulus))?, d as u32);
        for t in 2..=d as usize {
            for p in normalized_pairs(d, t, false) {
                ensure(lib(fermat_check(&p, modulus))?, || format!("{p} mod {modulus}"))?;
                let det = lib(lib(fermat_matrix(&p, modulus))?.det())?;
                ensure(det == target, || format!("{p}: det differs"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} reduced pairs with d = 4..8"))
}

fn ac9_invariants() -> Check {
    let mut pairs = 0;
    for d in 3..=12i64 {
        for t in 2..=d as usize {
            for p in normalized_pairs(d, t, false) {
                let q = p.transpose_dual();
                let dim = lib(dim_det(&p))?;
                ensure(dim == lib(dim_det(&q))?, || format!("transpose {p}"))?;
                let r = lib(build_resolution(&p))?;
                ensure(dim == hilbert_dim(&r) - lib(h0_oxc(&r))? + 1, || format!("consistency {p}"))?;
                ensure(lib(ideal_h0(&r, d))? == 1 && lib(ideal_h0(&r, d - 1))? == 0, || format!("uniqueness {p}"))?;
                let (deg, genus) = lib(curve_degree_genus(&r))?;
                for k in -5..=r.b_twists.largest() + 5 {
                    let (h0, h1) = lib(curve_h0_h1(&r, k))?;
                    ensure(h0 - h1 == i128::from(k) * deg + 1 - genus, || format!("euler {p} k={k}"))?;
                }
                pairs += 1;
            }
        }
        for c in lib(enumerate_classes(d))? {
            let rep = lib(component_report(&c.representative))?;
            ensure(rep.curve.kappa >= 0, || format!("kappa {}", c.representative))?;
            ensure(rep.codim >= i128::from(d - 3) && rep.codim <= binom(d - 1, 3), || {
                format!("codim bounds {}", c.representative)
            })?;
        }
    }
    Ok(format!("{pairs} reduced pairs with d <= 12"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("AC1", "component table", ac1_table),
        ("AC2", "quartic degrees", ac2_quartics),
        ("AC3", "worked identity", ac3_worked_identity),
        ("AC4", "closed forms", ac4_closed_forms),
        ("AC5", "extremal formulas", ac5_extremal),
        ("AC6", "conjecture sweep", ac6_conjecture),
        ("AC7", "oracle equivalence", ac7_oracle),
        ("AC8", "fermat identity", ac8_fermat),
        ("AC9", "invariant suites", ac9_invariants),
    ];
    let mut failed = 0;
    for (id, name, check) in criteria {
        match check() {
            Ok(detail) => println!("{id} PASS {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("{id} FAIL {name}: {detail}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
