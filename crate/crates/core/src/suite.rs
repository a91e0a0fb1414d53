//! The regression suite: ten numbered criteria covering the worked gl(4)
//! computation, subalgebra membership, the structure of the abelianized
//! algebra, orbit combinatorics, and the modular checks. Each criterion
//! produces a machine-readable pass/fail report; the set is shared by the
//! `suite` CLI subcommand and the integration test target.

use std::time::Instant;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::abelian::{build_ab_algebra, z_series, Convention};
use crate::modular::{
    build_gl3, build_sl2, qeta_report, theorem_d_check, NilpotentKind,
};
use crate::orbits::{
    induce, krull_dim_ab, orbit_profile, richardson, rigid_finiteness_flag, is_rigid,
    LeviDescriptor, Partition, SpectrumKind,
};
use crate::poly::{subalgebra_contains, MultiPoly, Rat};

#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    pub id: usize,
    pub tag: String,
    pub name: String,
    pub pass: bool,
    pub details: Vec<String>,
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub criteria: Vec<CriterionReport>,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.criteria.iter().all(|c| c.pass)
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// seed for the randomized induction sweeps
    pub seed: u64,
    /// cap on N for the exhaustive partition sweeps (None = built-in defaults)
    pub max_n: Option<u32>,
    /// substring filter on criterion tags
    pub only: Option<String>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: 0, max_n: None, only: None }
    }
}

struct Criterion {
    id: usize,
    tag: &'static str,
    name: &'static str,
    run: fn(&SuiteConfig) -> (bool, Vec<String>),
}

const CRITERIA: &[Criterion] = &[
    Criterion { id: 1, tag: "worked", name: "gl(4) worked z(u) expansion", run: c1 },
    Criterion { id: 2, tag: "subalgebra", name: "proper-subalgebra verdict", run: c2 },
    Criterion { id: 3, tag: "gln", name: "free generators, homogeneity, recursion residuals", run: c3 },
    Criterion { id: 4, tag: "krull", name: "Krull dimension = largest part", run: c4 },
    Criterion { id: 5, tag: "induction", name: "induction codimension and transitivity", run: c5 },
    Criterion { id: 6, tag: "centralizer", name: "centralizer dimension vs commutator nullity", run: c6 },
    Criterion { id: 7, tag: "rigidity", name: "rigid orbits are exactly (1^N)", run: c7 },
    Criterion { id: 8, tag: "qeta", name: "induced-module and Whittaker dimensions", run: c8 },
    Criterion { id: 9, tag: "theoremd", name: "simple modules of dimension p^{d(e)}", run: c9 },
    Criterion { id: 10, tag: "exclusions", name: "documented exclusions", run: c10 },
];

/// Runs a single criterion by number.
pub fn run_criterion(id: usize, cfg: &SuiteConfig) -> Option<CriterionReport> {
    let c = CRITERIA.iter().find(|c| c.id == id)?;
    let t = Instant::now();
    let (pass, details) = (c.run)(cfg);
    Some(CriterionReport {
        id: c.id,
        tag: c.tag.into(),
        name: c.name.into(),
        pass,
        details,
        elapsed_ms: t.elapsed().as_millis(),
    })
}

pub fn run_suite(cfg: &SuiteConfig) -> SuiteReport {
    let selected: Vec<&Criterion> = CRITERIA
        .iter()
        .filter(|c| cfg.only.as_deref().map_or(true, |o| c.tag.contains(o)))
        .collect();
    let mut criteria: Vec<CriterionReport> = selected
        .par_iter()
        .map(|c| {
            let t = Instant::now();
            let (pass, details) = (c.run)(cfg);
            CriterionReport {
                id: c.id,
                tag: c.tag.into(),
                name: c.name.into(),
                pass,
                details,
                elapsed_ms: t.elapsed().as_millis(),
            }
        })
        .collect();
    criteria.sort_by_key(|c| c.id);
    SuiteReport { seed: cfg.seed, criteria }
}

fn pt(parts: &[u32]) -> Partition {
    Partition::new(parts).unwrap()
}

fn cap(n: u32, cfg: &SuiteConfig) -> u32 {
    cfg.max_n.map_or(n, |m| m.min(n))
}

/// Criterion 1: the quartic central polynomial of the (2,2) orbit under the
/// worked-example convention, coefficient by coefficient, in under 1 s.
fn c1(_cfg: &SuiteConfig) -> (bool, Vec<String>) {
    let t = Instant::now();
    let alg = build_ab_algebra(&pt(&[2, 2]), 10, Convention::WorkedExample).unwrap();
    let z = z_series(&alg).unwrap();
    let vars: Vec<String> = alg.vars().to_vec();
    let c = |n: i64| Rat::from_integer(n.into());
    let term = |x: u32, y: u32, k: i64| (vec![x, y], c(k));
    // z(u) = u^4 - 2u^3 - (X^2+X-1)u^2 + (X^2-2XY-2Y+X)u + (XY-Y^2+Y)
    let expected = vec![
        MultiPoly::constant(&vars, Rat::one()),
        MultiPoly::from_int(&vars, -2),
        MultiPoly::from_terms(&vars, [term(2, 0, -1), term(1, 0, -1), term(0, 0, 1)]),
        MultiPoly::from_terms(&vars, [term(2, 0, 1), term(1, 1, -2), term(0, 1, -2), term(1, 0, 1)]),
        MultiPoly::from_terms(&vars, [term(1, 1, 1), term(0, 2, -1), term(0, 1, 1)]),
    ];
    let mut details = Vec::new();
    let coeff_match = z.z_polys == expected;
    let valid = z.validity.is_empty();
    let fast = t.elapsed().as_secs_f64() < 1.0;
    details.push(format!("coefficients match: {coeff_match}"));
    details.push(format!("no stray negative-power terms: {valid}"));
    details.push(format!("elapsed {:.3}s (< 1s: {fast})", t.elapsed().as_secs_f64()));
    (coeff_match && valid && fast, details)
}

/// Criterion 2: X is not in the subalgebra generated by
/// {X^2+X, Y(X+1), Y(X-Y+1)}, while each generator is; under 5 s.
fn c2(_cfg: &SuiteConfig) -> (bool, Vec<String>) {
    let t = Instant::now();
    let vars: Vec<String> = vec!["X".into(), "Y".into()];
    let x = MultiPoly::var(&vars, 0);
    let y = MultiPoly::var(&vars, 1);
    let one = MultiPoly::constant(&vars, Rat::one());
    let gens = vec![
        x.mul(&x).add(&x),
        y.mul(&x.add(&one)),
        y.mul(&x.sub(&y).add(&one)),
    ];
    let x_out = !subalgebra_contains(&x, &gens).unwrap();
    let gens_in = gens.iter().all(|g| subalgebra_contains(g, &gens).unwrap());
    let fast = t.elapsed().as_secs_f64() < 5.0;
    let details = vec![
        format!("X outside the subalgebra: {x_out}"),
        format!("every generator inside: {gens_in}"),
        format!("elapsed {:.3}s (< 5s: {fast})", t.elapsed().as_secs_f64()),
    ];
    (x_out && gens_in && fast, details)
}

/// Criterion 3: for every partition of N <= 6 at order 10, the free
/// generator count equals the largest part, normal forms are homogeneous,
/// all recursion residuals vanish; for (2,2) the printed convention gives
/// d_2 = d_1, and the discrepancy with the worked example is itself
/// detected.
fn c3(cfg: &SuiteConfig) -> (bool, Vec<String>) {
    let max = cap(6, cfg);
    let mut ok = true;
    let mut details = Vec::new();
    let mut count = 0usize;
    for n in 1..=max {
        for lam in Partition::all(n) {
            let alg = build_ab_algebra(&lam, 10, Convention::Printed).unwrap();
            count += 1;
            if alg.free_gens().len() as u32 != lam.largest_part() {
                ok = false;
                details.push(format!("{:?}: wrong free generator count", lam.parts()));
            }
            if !alg.is_homogeneous() {
                ok = false;
                details.push(format!("{:?}: inhomogeneous normal form", lam.parts()));
            }
            if !alg.dd_residuals().is_empty() {
                ok = false;
                details.push(format!("{:?}: nonzero recursion residual", lam.parts()));
            }
        }
    }
    details.push(format!("{count} partitions checked (N <= {max})"));

    if max >= 4 {
        let printed = build_ab_algebra(&pt(&[2, 2]), 10, Convention::Printed).unwrap();
        let rows_equal = (1..=10).all(|r| {
            printed.normal_form_gen(2, r).unwrap() == printed.normal_form_gen(1, r).unwrap()
        });
        let worked = build_ab_algebra(&pt(&[2, 2]), 10, Convention::WorkedExample).unwrap();
        let discrepancy = !worked.dd_residuals().is_empty();
        details.push(format!("(2,2) printed convention: d_2 = d_1: {rows_equal}"));
        details.push(format!("(2,2) conventions disagree as flagged: {discrepancy}"));
        ok = ok && rows_equal && discrepancy;
    }
    (ok, details)
}

/// Criterion 4: krull_dim_ab = largest part = #parts of the conjugate for
/// every partition of N <= 12, plus spot values.
fn c4(cfg: &SuiteConfig) -> (bool, Vec<String>) {
    let max = cap(12, cfg);
    let mut ok = true;
    let mut count = 0usize;
    for n in 1..=max {
        for lam in Partition::all(n) {
            count += 1;
            if krull_dim_ab(&lam) != lam.largest_part()
                || krull_dim_ab(&lam) != lam.conjugate().num_parts() as u32
            {
                ok = false;
            }
        }
    }
    if max >= 4 {
        ok = ok && krull_dim_ab(&pt(&[2, 2])) == 2;
    }
    ok = ok && (1..=max).all(|n| krull_dim_ab(&pt(&[n])) == n);
    (ok, vec![format!("{count} partitions checked (N <= {max})")])
}

/// Criterion 5: 10^4 random (Levi, orbit tuple) instances with N <= 10:
/// the centralizer codimension identity and two-stage transitivity of
/// induction; plus Richardson consistency for every partition of N <= 10.
fn c5(cfg: &SuiteConfig) -> (bool, Vec<String>) {
    let max = cap(10, cfg).max(2);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let parts_cache: Vec<Vec<Partition>> = (0..=max).map(Partition::all).collect();
    let mut ok = true;
    let mut details = Vec::new();
    const SWEEPS: usize = 10_000;

    for _ in 0..SWEEPS {
        let n: u32 = rng.gen_range(2..=max);
        // random composition of n into Levi blocks
        let mut blocks = Vec::new();
        let mut rest = n;
        while rest > 0 {
            let b = rng.gen_range(1..=rest);
            blocks.push(b);
            rest -= b;
        }
        let levi = LeviDescriptor::new(&blocks).unwrap();
        let orbits: Vec<Partition> = levi
            .blocks()
            .iter()
            .map(|&b| {
                let choices = &parts_cache[b as usize];
                choices[rng.gen_range(0..choices.len())].clone()
            })
            .collect();
        let induced = induce(&levi, &orbits).unwrap();

        // codimension identity: the centralizer dimension is additive
        let r_sum: u32 = orbits.iter().map(|o| orbit_profile(o).r).sum();
        if orbit_profile(&induced).r != r_sum {
            ok = false;
            details.push(format!("codimension failure at {:?}", levi.blocks()));
            break;
        }

        // two-stage transitivity: group the blocks, induce within each
        // group, then induce the group results
        let m = levi.blocks().len();
        let k = rng.gen_range(1..=m);
        let assign: Vec<usize> = (0..m).map(|_| rng.gen_range(0..k)).collect();
        let mut group_blocks = Vec::new();
        let mut group_orbits = Vec::new();
        for g in 0..k {
            let idx: Vec<usize> = (0..m).filter(|&i| assign[i] == g).collect();
            if idx.is_empty() {
                continue;
            }
            let inner_blocks: Vec<u32> = idx.iter().map(|&i| levi.blocks()[i]).collect();
            let inner_orbits: Vec<Partition> = idx.iter().map(|&i| orbits[i].clone()).collect();
            let inner = LeviDescriptor::new(&inner_blocks).unwrap();
            // LeviDescriptor sorts blocks; re-sort the orbits to match
            let mut paired: Vec<(u32, Partition)> =
                inner_blocks.into_iter().zip(inner_orbits).collect();
            paired.sort_by(|a, b| b.0.cmp(&a.0));
            let sorted_orbits: Vec<Partition> = paired.into_iter().map(|(_, o)| o).collect();
            group_blocks.push(inner.n());
            group_orbits.push(induce(&inner, &sorted_orbits).unwrap());
        }
        let outer = LeviDescriptor::new(&group_blocks).unwrap();
        let mut paired: Vec<(u32, Partition)> =
            group_blocks.into_iter().zip(group_orbits).collect();
        paired.sort_by(|a, b| b.0.cmp(&a.0));
        let sorted: Vec<Partition> = paired.into_iter().map(|(_, o)| o).collect();
        if induce(&outer, &sorted).unwrap() != induced {
            ok = false;
            details.push(format!("transitivity failure at {:?}", levi.blocks()));
            break;
        }
    }
    details.push(format!("{SWEEPS} randomized induction instances, seed {}", cfg.seed));

    let mut richardson_ok = true;
    let mut count = 0usize;
    for n in 1..=max {
        for mu in Partition::all(n) {
            count += 1;
            if richardson(&mu) != mu.conjugate() {
                richardson_ok = false;
            }
        }
    }
    details.push(format!("Richardson = conjugate for {count} partitions (N <= {max})"));
    (ok && richardson_ok, details)
}

/// Criterion 6: the combinatorial centralizer dimension r agrees with the
/// nullity of ad(e) on gl(N), computed by exact elimination over Q.
fn c6(cfg: &SuiteConfig) -> (bool, Vec<String>) {
    let max = cap(6, cfg);
    let mut ok = true;
    let mut count = 0usize;
    for n in 1..=max {
        for lam in Partition::all(n) {
            count += 1;
            if commutator_nullity(&lam) as u32 != orbit_profile(&lam).r {
                ok = false;
            }
        }
    }
    (ok, vec![format!("{count} partitions checked against the linear-algebra oracle")])
}

/// Nullity of X -> eX - Xe on gl(N), e the Jordan matrix of type lambda.
fn commutator_nullity(lambda: &Partition) -> usize {
    let n = lambda.n() as usize;
    let mut e = vec![vec![0i64; n]; n];
    let mut off = 0usize;
    for &part in lambda.parts() {
        for i in 0..(part as usize - 1) {
            e[off + i][off + i + 1] = 1;
        }
        off += part as usize;
    }
    // column for E_ab: (e E_ab - E_ab e) flattened
    let dim = n * n;
    let mut m = vec![vec![Rat::zero(); dim]; dim];
    for a in 0..n {
        for b in 0..n {
            let col = a * n + b;
            for i in 0..n {
                if e[i][a] != 0 {
                    m[i * n + b][col] += Rat::from_integer(e[i][a].into());
                }
            }
            for j in 0..n {
                if e[b][j] != 0 {
                    m[a * n + j][col] -= Rat::from_integer(e[b][j].into());
                }
            }
        }
    }
    dim - rational_rank(m)
}

fn rational_rank(mut m: Vec<Vec<Rat>>) -> usize {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut rank = 0usize;
    for c in 0..cols {
        let Some(pr) = (rank..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, pr);
        let inv = m[rank][c].clone();
        for j in 0..cols {
            m[rank][j] = &m[rank][j] / &inv;
        }
        for i in 0..rows {
            if i != rank && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let v = &m[i][j] - &f * &m[rank][j];
                    m[i][j] = v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Criterion 7: exhaustive rigidity for N <= 7; rigid iff (1^N), and the
/// finiteness flag matches.
fn c7(cfg: &SuiteConfig) -> (bool, Vec<String>) {
    let max = cap(7, cfg);
    let mut ok = true;
    let mut count = 0usize;
    for n in 1..=max {
        for lam in Partition::all(n) {
            count += 1;
            let rigid = is_rigid(&lam);
            if rigid != lam.is_zero_orbit() {
                ok = false;
            }
            let flag = rigid_finiteness_flag(&lam);
            if rigid != (flag == SpectrumKind::FiniteSpectrum) {
                ok = false;
            }
        }
    }
    (ok, vec![format!("{count} partitions checked exhaustively (N <= {max})")])
}

/// Criterion 8: dim Q = p^2 and Whittaker dimension p for sl_2 at
/// p in {3,5,7}; dim Q = 729 and Whittaker dimension 27 for gl_3 at p = 3;
/// p-character consistency everywhere.
fn c8(_cfg: &SuiteConfig) -> (bool, Vec<String>) {
    let mut ok = true;
    let mut details = Vec::new();
    for p in [3u64, 5, 7] {
        let l = build_sl2(p).unwrap();
        let rep = qeta_report(&l, NilpotentKind::Regular).unwrap();
        ok &= rep.all_pass();
        for c in rep.checks.iter().filter(|c| !c.pass) {
            details.push(format!("sl2 p={p}: {} expected {} got {}", c.name, c.expected, c.got));
        }
        details.push(format!("sl2 p={p}: {} checks pass: {}", rep.checks.len(), rep.all_pass()));
    }
    let l = build_gl3(3).unwrap();
    let rep = qeta_report(&l, NilpotentKind::Regular).unwrap();
    ok &= rep.all_pass();
    for c in rep.checks.iter().filter(|c| !c.pass) {
        details.push(format!("gl3 p=3: {} expected {} got {}", c.name, c.expected, c.got));
    }
    details.push(format!("gl3 p=3: {} checks pass: {}", rep.checks.len(), rep.all_pass()));
    (ok, details)
}

/// Criterion 9: for sl_2 at p in {3,5,7} with the regular nilpotent
/// character, a Burnside-certified simple module of dimension p exists and
/// every simple dimension found is divisible by p; total under 60 s.
fn c9(_cfg: &SuiteConfig) -> (bool, Vec<String>) {
    let t = Instant::now();
    let mut ok = true;
    let mut details = Vec::new();
    for p in [3u64, 5, 7] {
        let l = build_sl2(p).unwrap();
        let rep = theorem_d_check(&l, NilpotentKind::Regular).unwrap();
        ok &= rep.all_pass();
        details.push(format!("sl2 p={p}: all checks pass: {}", rep.all_pass()));
        for c in rep.checks.iter().filter(|c| !c.pass) {
            details.push(format!("sl2 p={p}: {} expected {} got {}", c.name, c.expected, c.got));
        }
    }
    let fast = t.elapsed().as_secs_f64() < 60.0;
    details.push(format!("elapsed {:.3}s (< 60s: {fast})", t.elapsed().as_secs_f64()));
    (ok && fast, details)
}

/// Criterion 10: what is deliberately out of scope, stated where tooling
/// can see it. The library covers these regimes only through the bounded
/// property sweeps above.
fn c10(_cfg: &SuiteConfig) -> (bool, Vec<String>) {
    let exclusions = vec![
        "general reductive algebras at unbounded primes: only sl_2, gl_3, sl_3 \
         at single-digit primes are modelled",
        "rigid orbits outside type A (exceptional types): not modelled; rigidity \
         here is the type-A exhaustive search",
        "primitive-ideal and Goldie-rank statements: not modelled",
        "freeness of the abelianization (no-hidden-relations): exercised only \
         via homogeneity, recursion residuals and specialization, not re-proved",
    ];
    let details: Vec<String> = exclusions.iter().map(|s| s.to_string()).collect();
    (!details.is_empty(), details)
}
