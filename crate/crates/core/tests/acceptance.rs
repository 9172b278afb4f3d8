//! Acceptance criteria, one line of output per criterion. Runs without the
//! libtest harness so the lines are always printed.

use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stickelberger::arith::{self, rat, rat_int};
use stickelberger::chartab::{ag_kernel, burnside_table, character_table, CharacterTable, VirtualCharacter};
use stickelberger::grp::{abelian_invariants, builtin, catalog, is_isomorphic, FiniteGroup};
use stickelberger::localtame::{
    admissible_pairs, det_distinguishes_classes, det_resolvend_cyclic, disc_valuation, factorise_hom,
    phi_map, residue_characteristic, LocalElement, TameQuotient,
};
use stickelberger::stick::{
    class_fingerprint, f_element, galois_twist_pair_check, stick_pair, stick_pair_via_induction, theta_map,
    theta_transpose,
};
use stickelberger::Cyclotomic;

const QS: [u64; 4] = [2, 3, 5, 7];
const SMALL: [&str; 18] = [
    "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12", "S3", "S4", "D4", "D5", "D6", "Q8", "A4",
];

type Verdict = Result<String, String>;

struct Ctx {
    tables: Vec<Arc<CharacterTable>>,
}

impl Ctx {
    fn new() -> Self {
        let tables = catalog()
            .into_iter()
            .map(|g| character_table(&Arc::new(g)).expect("catalog table"))
            .collect();
        Ctx { tables }
    }
}

fn irr(t: &Arc<CharacterTable>) -> Vec<VirtualCharacter> {
    (0..t.num_irreducibles()).map(|i| VirtualCharacter::irreducible(t, i)).collect()
}

fn ints(v: &[BigInt]) -> String {
    v.iter().map(BigInt::to_string).collect::<Vec<_>>().join(",")
}

fn sigma_coprime(g: &FiniteGroup, q: u64) -> Vec<usize> {
    g.sigma_set(q, true)
        .expect("prime q")
        .into_iter()
        .filter(|&s| arith::gcd(q, g.element_order(s)) == 1)
        .collect()
}

fn c1_tables() -> Verdict {
    let start = Instant::now();
    for name in SMALL {
        let g = Arc::new(builtin(name).map_err(|e| e.to_string())?);
        let t = character_table(&g).map_err(|e| e.to_string())?;
        if let Err(d) = t.validate() {
            return Err(format!("{name}: {} at ({}, {})", d.check, d.i, d.j));
        }
        let exact = burnside_table(&g).map_err(|e| e.to_string())?;
        if !t.same_rows(&exact) {
            return Err(format!("{name}: modular and exact tables differ"));
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(60) {
        return Err(format!("took {elapsed:.1?}"));
    }
    Ok(format!("{} groups in {elapsed:.1?}", SMALL.len()))
}

fn c2_pairing_routes(ctx: &Ctx) -> Verdict {
    let mut n = 0;
    for t in &ctx.tables {
        let g = t.group();
        for (i, chi) in irr(t).iter().enumerate() {
            for s in 0..g.order() {
                let via = stick_pair_via_induction(chi, s).map_err(|e| e.to_string())?;
                if via != stick_pair(chi, s) {
                    return Err(format!("{} chi_{i} s={}", g.name(), g.label(s)));
                }
                n += 1;
            }
        }
    }
    Ok(format!("{n} (chi, s) pairs, no discrepancies"))
}

fn c3_fingerprints(ctx: &Ctx) -> Verdict {
    let mut pairs = 0;
    let mut collisions = Vec::new();
    for t in &ctx.tables {
        let g = t.group();
        let fps: Vec<Vec<BigRational>> = (0..g.num_classes()).map(|c| class_fingerprint(t, g.class_rep(c))).collect();
        for a in 0..fps.len() {
            for b in 0..a {
                pairs += 1;
                if fps[a] == fps[b] {
                    collisions.push(format!("{}: {} ~ {}", g.name(), g.label(g.class_rep(b)), g.label(g.class_rep(a))));
                }
            }
        }
    }
    if collisions.is_empty() {
        Ok(format!("{pairs} class pairs separated"))
    } else {
        Err(format!("{} of {pairs} class pairs collide: {}", collisions.len(), collisions.join("; ")))
    }
}

fn c4_theta(ctx: &Ctx) -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut cases = 0;
    for t in &ctx.tables {
        let g = t.group();
        let chars = irr(t);
        for (i, chi) in chars.iter().enumerate() {
            let th = theta_map(chi);
            let constant = (0..g.order()).all(|x| th.coefficient(x) == th.coefficient(g.class_rep(g.class_of(x))));
            if !th.is_central() || !constant {
                return Err(format!("{} Theta(chi_{i}) not class-constant", g.name()));
            }
        }
        let ag = ag_kernel(t);
        for _ in 0..200 {
            let v: Vec<BigInt> = (0..chars.len()).map(|_| BigInt::from(rng.gen_range(-5..=5))).collect();
            let chi = VirtualCharacter::from_big_coords(t, &v).map_err(|e| e.to_string())?;
            if theta_map(&chi).is_integral() != ag.contains(&v) {
                return Err(format!("{} chi=[{}] integrality", g.name(), ints(&v)));
            }
            cases += 1;
        }
        let e = g.exponent();
        for k in (1..=e as i64).filter(|&k| arith::gcd(k as u64, e) == 1) {
            for (i, chi) in chars.iter().enumerate() {
                for x in 0..g.order() {
                    let (lhs, rhs) = galois_twist_pair_check(chi, x, k).map_err(|e| e.to_string())?;
                    if lhs != rhs {
                        return Err(format!("{} chi_{i} s={} k={k}", g.name(), g.label(x)));
                    }
                    cases += 1;
                }
            }
        }
    }
    Ok(format!("{cases} integrality and equivariance cases"))
}

fn c5_ag_index(ctx: &Ctx) -> Verdict {
    for t in &ctx.tables {
        let g = t.group();
        let ab = g.derived_and_abelianization();
        let ag = ag_kernel(t);
        if *ag.index() != BigInt::from(ab.quotient.order())
            || ag.quotient_invariants_u64() != abelian_invariants(&ab.quotient)
        {
            return Err(format!("{}: index {} vs |G^ab| {}", g.name(), ag.index(), ab.quotient.order()));
        }
    }
    Ok(format!("{} groups", ctx.tables.len()))
}

fn random_ag_vector(rng: &mut ChaCha8Rng, basis: &[Vec<BigInt>], n: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::from(0); n];
    for row in basis {
        let c = BigInt::from(rng.gen_range(-5..=5));
        for (x, b) in v.iter_mut().zip(row) {
            *x += &c * b;
        }
    }
    v
}

fn c6_phi_value(ctx: &Ctx) -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let (mut values, mut bridges) = (0, 0);
    for t in &ctx.tables {
        let g = t.group();
        let chars = irr(t);
        let ag = ag_kernel(t);
        for q in QS {
            for s in sigma_coprime(g, q) {
                let r = phi_map(g, q, s, true).map_err(|e| e.to_string())?.resolvend();
                for (i, chi) in chars.iter().enumerate() {
                    let det = det_resolvend_cyclic(&r, chi).map_err(|e| e.to_string())?;
                    if det != LocalElement::uniformizer_power(q, true, stick_pair(chi, s)) {
                        return Err(format!("{} q={q} s={} chi_{i}: {det}", g.name(), g.label(s)));
                    }
                    values += 1;
                }
                let f = f_element(g, q, s, true).map_err(|e| e.to_string())?;
                let mut alphas: Vec<Vec<BigInt>> = ag.basis().to_vec();
                alphas.extend((0..20).map(|_| random_ag_vector(&mut rng, ag.basis(), chars.len())));
                for alpha in &alphas {
                    let lhs = theta_transpose(&f, &ag, alpha).map_err(|e| e.to_string())?;
                    let chi = VirtualCharacter::from_big_coords(t, alpha).map_err(|e| e.to_string())?;
                    let rhs = det_resolvend_cyclic(&r, &chi).map_err(|e| e.to_string())?;
                    if lhs != rhs {
                        return Err(format!("{} q={q} s={} alpha=[{}]", g.name(), g.label(s), ints(alpha)));
                    }
                    bridges += 1;
                }
            }
        }
    }
    Ok(format!("{values} Det values, {bridges} bridge cases"))
}

fn c7_distinguishes(ctx: &Ctx) -> Verdict {
    let mut pairs = 0;
    for t in &ctx.tables {
        let g = t.group();
        let chars = irr(t);
        for q in QS {
            let sigma = sigma_coprime(g, q);
            let dets: Vec<Vec<LocalElement>> = sigma
                .iter()
                .map(|&s| {
                    let r = phi_map(g, q, s, true)?.resolvend();
                    chars.iter().map(|chi| det_resolvend_cyclic(&r, chi)).collect()
                })
                .collect::<stickelberger::Result<_>>()
                .map_err(|e| e.to_string())?;
            for (a, &s1) in sigma.iter().enumerate() {
                for (b, &s2) in sigma.iter().enumerate() {
                    let conj = g.class_of(s1) == g.class_of(s2);
                    if (dets[a] == dets[b]) != conj {
                        return Err(format!("{} q={q} s1={} s2={}", g.name(), g.label(s1), g.label(s2)));
                    }
                    pairs += 1;
                }
                for &rep in sigma.iter().filter(|&&x| g.class_rep(g.class_of(x)) == x) {
                    let same = det_distinguishes_classes(t, q, s1, rep, true).map_err(|e| e.to_string())?;
                    if same != (g.class_of(s1) == g.class_of(rep)) {
                        return Err(format!("{} q={q} s1={} s2={}", g.name(), g.label(s1), g.label(rep)));
                    }
                }
            }
        }
    }
    Ok(format!("{pairs} ordered pairs over Sigma_q"))
}

fn c8_tame() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for q in QS {
        let p = residue_characteristic(q);
        let dens: Vec<u64> = (1..=12).filter(|&m| arith::gcd(m, p) == 1).collect();
        for n in 0..100 {
            let terms: Vec<(BigRational, Cyclotomic)> = (0..rng.gen_range(1..=3))
                .map(|_| {
                    let m = dens[rng.gen_range(0..dens.len())];
                    let level = dens[rng.gen_range(0..dens.len())];
                    let poly = (0..level).map(|_| rat_int(rng.gen_range(-5..=5))).collect();
                    (rat(rng.gen_range(-5..=5), m as i64), Cyclotomic::from_poly(level, poly))
                })
                .collect();
            let x = LocalElement::from_terms(q, true, terms).map_err(|e| e.to_string())?;
            let lhs = x.phi_inv().and_then(|y| y.sigma_op().phi_op()).map_err(|e| e.to_string())?;
            if lhs != x.sigma_pow(q as i64) {
                return Err(format!("operator relation q={q} sample {n}: {x}"));
            }
        }
    }
    let s3 = TameQuotient::new(2, 3, 2).and_then(|t| t.to_group()).map_err(|e| e.to_string())?;
    if !is_isomorphic(&s3, &builtin("S3").map_err(|e| e.to_string())?) {
        return Err("tame quotient (2, 3, 2) is not S3".into());
    }
    let mut homs = 0;
    for g in catalog().into_iter().map(Arc::new) {
        for q in [2, 3] {
            for (quot, s, t) in admissible_pairs(&g, q) {
                if quot.big_m() != g.element_order(s) || quot.big_n() != arith::multiplicative_order(q, quot.big_m()).unwrap() {
                    return Err(format!("{} q={q}: unexpected (M, N)", g.name()));
                }
                let report = factorise_hom(&quot, &g, s, t).map_err(|e| e.to_string())?;
                if let Some(c) = report.checks.iter().find(|c| !c.pass) {
                    return Err(format!("{} q={q} s={} t={}: {} {:?}", g.name(), report.s, report.t, c.name, c.failing_pair));
                }
                homs += 1;
            }
        }
    }
    Ok(format!("400 operator samples, S3 quotient, {homs} factorisations"))
}

fn c9_disc(ctx: &Ctx) -> Verdict {
    for t in &ctx.tables {
        let g = t.group();
        for s in 0..g.order() {
            let v = disc_valuation(g, s);
            let o = g.element_order(s) as i64;
            let expect = rat((o - 1) * g.order() as i64, o);
            if !v.is_integer() || v != expect || (v == rat_int(0)) != (s == g.identity()) {
                return Err(format!("{} s={} v={v}", g.name(), g.label(s)));
            }
        }
    }
    let s3 = builtin("S3").map_err(|e| e.to_string())?;
    let at = |label: &str| disc_valuation(&s3, s3.labels().iter().position(|l| l == label).unwrap());
    if at("(1 2 3)") != rat_int(4) || at("(1 2)") != rat_int(3) {
        return Err("S3 spot values".into());
    }
    Ok("integral, zero only at the identity, S3 spot values 4 and 3".into())
}

fn c10_determinism() -> Verdict {
    let run = || {
        let start = Instant::now();
        let out = Command::new(env!("CARGO_BIN_EXE_stickelberger"))
            .args(["verify", "--all-catalog", "--seed", "0", "--format", "json"])
            .output()
            .map_err(|e| e.to_string())?;
        Ok::<_, String>((out.stdout, start.elapsed()))
    };
    let (a, ta) = run()?;
    let (b, tb) = run()?;
    if a.is_empty() || a != b {
        return Err("reports differ between runs".into());
    }
    let slowest = ta.max(tb);
    if slowest > Duration::from_secs(300) {
        return Err(format!("suite took {slowest:.1?}"));
    }
    Ok(format!("{} identical bytes, slowest run {slowest:.1?}", a.len()))
}

fn main() {
    let ctx = Ctx::new();
    let criteria: Vec<(&str, Box<dyn Fn() -> Verdict + '_>)> = vec![
        ("character tables valid and equal to the exact oracle", Box::new(c1_tables)),
        ("pairing equals inner product with Ind Xi(s)", Box::new(|| c2_pairing_routes(&ctx))),
        ("class fingerprints injective on conjugacy classes", Box::new(|| c3_fingerprints(&ctx))),
        ("Theta central, integral exactly on A_G, Galois equivariant", Box::new(|| c4_theta(&ctx))),
        ("[Z^Irr(G) : A_G] = |G^ab|", Box::new(|| c5_ag_index(&ctx))),
        ("Det of phi-resolvends and the Theta transpose bridge", Box::new(|| c6_phi_value(&ctx))),
        ("Det of phi-resolvends separates Sigma_q classes", Box::new(|| c7_distinguishes(&ctx))),
        ("tame operator relation, quotient and factorisations", Box::new(c8_tame)),
        ("discriminant valuations", Box::new(|| c9_disc(&ctx))),
        ("verify --all-catalog is deterministic and within budget", Box::new(c10_determinism)),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", n + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", n + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
