use std::time::Instant;

use qcc_core::charclass::{
    check_conjecture, open_orbit_class, orbit_class_v1, orbit_class_v2, verify_dt_invariance, verify_sum_identity,
    Strategy, Verdict,
};
use qcc_core::hall::{shuffle_product, Mode};
use qcc_core::poly::{LaurentPoly, Monomial};
use qcc_core::quiver::{all_reineke_orders, type_a_open_orbit_diagram, DimVector, KostantPartition, Quiver};
use qcc_core::repalg::{RootCatalog, StabilityFunction};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::context::{CliError, Context};
use crate::{Format, GlobalOpts, Method, StrategyArg, Verify};

/// Command output. `ok` is false when a verification failed.
pub struct Report {
    pub ok: bool,
    pub text: String,
    pub json: Value,
}

impl Report {
    fn ok(text: String, json: Value) -> Report {
        Report { ok: true, text, json }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("json value");
                s.push('\n');
                s
            }
        }
    }
}

fn poly_json(p: &LaurentPoly) -> Value {
    json!({ "display": p.to_string(), "terms": serde_json::to_value(p).expect("poly serializes") })
}

fn dim_json(d: &DimVector) -> Value {
    json!(d.0)
}

/// `(1,1,0) + 2*(0,1,0)` in Reineke order; `0` for the empty partition.
fn describe(cat: &RootCatalog, m: &KostantPartition) -> String {
    let parts: Vec<String> = cat
        .reineke
        .iter()
        .filter(|&&j| m.0[j] > 0)
        .map(|&j| match m.0[j] {
            1 => cat.roots[j].to_string(),
            k => format!("{k}*{}", cat.roots[j]),
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn partition_json(cat: &RootCatalog, m: &KostantPartition) -> Value {
    let parts: Vec<Value> = cat
        .reineke
        .iter()
        .filter(|&&j| m.0[j] > 0)
        .map(|&j| json!({ "root": dim_json(&cat.roots[j]), "mult": m.0[j] }))
        .collect();
    Value::Array(parts)
}

/// Parses `1,1,0;0,1,0*2`.
fn parse_partition(cat: &RootCatalog, s: &str) -> Result<KostantPartition, CliError> {
    let mut m = vec![0u32; cat.n_roots()];
    for item in s.split(';').map(str::trim).filter(|t| !t.is_empty()) {
        let (root, mult) = match item.split_once('*') {
            Some((r, k)) => {
                let k = k
                    .trim()
                    .parse::<u32>()
                    .map_err(|_| CliError::Usage(format!("bad multiplicity in `{item}`")))?;
                (r, k)
            }
            None => (item, 1),
        };
        let d: DimVector = root.parse()?;
        cat.quiver.check_dim(&d)?;
        let j = cat
            .root_index(&d)
            .ok_or_else(|| CliError::Usage(format!("{d} is not a positive root")))?;
        m[j] += mult;
    }
    Ok(KostantPartition(m))
}

pub fn roots(g: &GlobalOpts) -> Result<Report, CliError> {
    let ctx = Context::load(g)?;
    let q = ctx.quiver();
    let mut text = format!("type {}\n{} positive roots\n", q.dynkin_type(), ctx.cat.n_roots());
    for r in &ctx.cat.roots {
        text += &format!("{r}\n");
    }
    let json = json!({
        "type": q.dynkin_type().to_string(),
        "roots": ctx.cat.roots.iter().map(dim_json).collect::<Vec<_>>(),
    });
    Ok(Report::ok(text, json))
}

pub fn reineke(g: &GlobalOpts, all: bool, limit: usize) -> Result<Report, CliError> {
    let ctx = Context::load(g)?;
    let cat = &ctx.cat;
    let orders = if all {
        all_reineke_orders(&cat.quiver, &cat.roots, limit)?
    } else {
        vec![cat.reineke.clone()]
    };
    let named: Vec<Vec<DimVector>> = orders
        .iter()
        .map(|o| o.iter().map(|&j| cat.roots[j].clone()).collect())
        .collect();
    let mut text = String::new();
    if all {
        text += &format!("{} orders\n", named.len());
    }
    for o in &named {
        let line: Vec<String> = o.iter().map(|r| r.to_string()).collect();
        text += &line.join(" < ");
        text.push('\n');
    }
    let as_json = |o: &Vec<DimVector>| o.iter().map(dim_json).collect::<Vec<_>>();
    let json = if all {
        json!({ "orders": named.iter().map(as_json).collect::<Vec<_>>() })
    } else {
        json!({ "order": as_json(&named[0]) })
    };
    Ok(Report::ok(text, json))
}

pub fn kostant(g: &GlobalOpts, gamma: &DimVector) -> Result<Report, CliError> {
    let ctx = Context::load(g)?;
    ctx.check_dim(gamma)?;
    let cat = &ctx.cat;
    let parts = cat.kostant_partitions(gamma);
    let mut text = format!("{} Kostant partitions of {gamma}\n", parts.len());
    let mut rows = Vec::new();
    for m in &parts {
        let codim = cat.codimension(m);
        text += &format!("codim {codim:>3}  {}\n", describe(cat, m));
        rows.push(json!({ "partition": partition_json(cat, m), "codimension": codim }));
    }
    Ok(Report::ok(
        text,
        json!({ "gamma": dim_json(gamma), "partitions": rows }),
    ))
}

pub fn class(g: &GlobalOpts, gamma: &DimVector, part: Option<&str>, method: Method) -> Result<Report, CliError> {
    let ctx = Context::load(g)?;
    ctx.check_dim(gamma)?;
    let cat = &ctx.cat;
    let mode = g.mode;
    let m = match part {
        Some(s) => {
            let m = parse_partition(cat, s)?;
            let d = m.dim(&cat.roots);
            if &d != gamma {
                return Err(CliError::Usage(format!("partition has dimension {d}, not {gamma}")));
            }
            m
        }
        None => cat.generic_kostant_partition(gamma)?,
    };
    let table = ctx.table(&[mode], Some(vec![gamma.clone()]), Strategy::Sieve, true)?;
    let start = Instant::now();
    let class = match method {
        Method::V1 => orbit_class_v1(cat, &m, mode, &table)?,
        Method::V2 if part.is_none() => open_orbit_class(cat, gamma, mode, &table)?,
        Method::V2 => orbit_class_v2(cat, &m, mode, &table)?,
    };
    eprintln!("qcc: class computed in {:.3?}", start.elapsed());
    let codim = cat.codimension(&m);
    let method = match method {
        Method::V1 => "v1",
        Method::V2 => "v2",
    };
    let text = format!(
        "gamma {gamma}\norbit {}\ncodimension {codim}\nmode {mode}\nmethod {method}\nclass {class}\n",
        describe(cat, &m)
    );
    let json = json!({
        "gamma": dim_json(gamma),
        "partition": partition_json(cat, &m),
        "codimension": codim,
        "mode": mode.to_string(),
        "method": method,
        "class": poly_json(&class),
    });
    Ok(Report::ok(text, json))
}

pub fn table(
    g: &GlobalOpts,
    whitelist: Vec<DimVector>,
    strategy: StrategyArg,
    full_sieve: bool,
) -> Result<Report, CliError> {
    let ctx = Context::load(g)?;
    for d in &whitelist {
        ctx.check_dim(d)?;
    }
    let strategy = match strategy {
        StrategyArg::Sieve => Strategy::Sieve,
        StrategyArg::Commutator => Strategy::CommutatorFirst,
    };
    let tops = (!whitelist.is_empty()).then_some(whitelist.clone());
    let start = Instant::now();
    let table = ctx.table(&[g.mode], tops, strategy, !full_sieve)?;
    eprintln!("qcc: table ready in {:.3?}", start.elapsed());
    let mut text = String::new();
    let mut rows = Vec::new();
    for b in &ctx.cat.roots {
        if !whitelist.is_empty() && !whitelist.iter().any(|w| b.fits_in(w)) {
            continue;
        }
        let (Some(c), Some(p)) = (table.get(b, g.mode), table.provenance(b, g.mode)) else {
            continue;
        };
        text += &format!("{b} [{p}] {c}\n");
        rows.push(json!({ "root": dim_json(b), "provenance": p.to_string(), "class": poly_json(c) }));
    }
    Ok(Report::ok(text, json!({ "mode": g.mode.to_string(), "entries": rows })))
}

pub fn diagram(g: &GlobalOpts, gamma: &DimVector) -> Result<Report, CliError> {
    let ctx = Context::load(g)?;
    ctx.check_dim(gamma)?;
    let d = type_a_open_orbit_diagram(ctx.quiver(), &ctx.cat.roots, gamma)?;
    let mut text = d.text.clone();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    text += &format!("orbit {}\n", describe(&ctx.cat, &d.partition));
    let json = json!({
        "diagram": d.text,
        "intervals": d.intervals,
        "partition": partition_json(&ctx.cat, &d.partition),
    });
    Ok(Report::ok(text, json))
}

pub fn verify(g: &GlobalOpts, which: Verify) -> Result<Report, CliError> {
    let ctx = Context::load(g)?;
    match which {
        Verify::Sum { gamma } => verify_sum(&ctx, &gamma),
        Verify::Dt {
            z1,
            z2,
            z,
            random,
            cutoff,
        } => {
            let mut zs: Vec<StabilityFunction> = z1.into_iter().chain(z2).chain(z).collect();
            ctx.check_dim(&cutoff)?;
            let mut rng = ChaCha8Rng::seed_from_u64(g.seed);
            let n = ctx.quiver().n_vertices();
            zs.extend((0..random).map(|_| StabilityFunction::random_generic(n, &cutoff, 5, &mut rng)));
            if zs.is_empty() {
                return Err(CliError::Usage("no stability functions given".into()));
            }
            if let Some(z) = zs.iter().find(|z| z.len() != n) {
                return Err(CliError::Usage(format!(
                    "stability function has {} charges, expected {n}",
                    z.len()
                )));
            }
            verify_dt(&ctx, &zs, &cutoff)
        }
        Verify::Conjecture { beta } => verify_conjecture(&ctx, beta),
        Verify::Associativity { samples, max_total } => verify_associativity(&ctx, samples, max_total),
    }
}

fn verdict_json(v: &Verdict) -> Value {
    let mut out = json!({ "gamma": dim_json(&v.gamma), "holds": v.holds });
    if !v.holds {
        out["difference"] = poly_json(&v.difference);
    }
    out
}

fn verify_sum(ctx: &Context, gamma: &DimVector) -> Result<Report, CliError> {
    ctx.check_dim(gamma)?;
    let mode = ctx.opts.mode;
    let table = ctx.table(&[mode], Some(vec![gamma.clone()]), Strategy::Sieve, true)?;
    let v = verify_sum_identity(&ctx.cat, gamma, mode, &table)?;
    let n = ctx.cat.kostant_partitions(gamma).len();
    let mut text = format!(
        "sum over {n} orbits of {gamma} ({mode}): {}\n",
        if v.holds { "pass" } else { "FAIL" }
    );
    if !v.holds {
        text += &format!("difference {}\n", v.difference);
    }
    Ok(Report {
        ok: v.holds,
        text,
        json: json!({ "mode": mode.to_string(), "orbits": n, "verdict": verdict_json(&v) }),
    })
}

fn verify_dt(ctx: &Context, zs: &[StabilityFunction], cutoff: &DimVector) -> Result<Report, CliError> {
    let mode = ctx.opts.mode;
    let table = ctx.table(&[mode], Some(vec![cutoff.clone()]), Strategy::Sieve, true)?;
    let report = verify_dt_invariance(&ctx.cat, zs, cutoff, mode, &table)?;
    let mut ok = true;
    let mut text = String::new();
    let mut rows = Vec::new();
    for (k, verdicts) in report.iter().enumerate() {
        let passed = verdicts.iter().filter(|v| v.holds).count();
        let stable: Vec<String> = ctx
            .cat
            .stable_roots(&zs[k])?
            .iter()
            .map(|&i| ctx.cat.roots[i].to_string())
            .collect();
        text += &format!(
            "Z{}: {passed}/{} components below {cutoff} ({mode}); stable roots {}\n",
            k + 1,
            verdicts.len(),
            stable.join(" ")
        );
        if let Some(v) = verdicts.iter().find(|v| !v.holds) {
            ok = false;
            text += &format!("  first failure at {}: difference {}\n", v.gamma, v.difference);
        }
        rows.push(json!({
            "index": k + 1,
            "stable_roots": stable,
            "verdicts": verdicts.iter().map(verdict_json).collect::<Vec<_>>(),
        }));
    }
    text += if ok { "pass\n" } else { "FAIL\n" };
    Ok(Report {
        ok,
        text,
        json: json!({ "mode": mode.to_string(), "cutoff": dim_json(cutoff), "holds": ok, "functions": rows }),
    })
}

fn verify_conjecture(ctx: &Context, beta: Option<DimVector>) -> Result<Report, CliError> {
    let cat = &ctx.cat;
    let betas = match beta {
        Some(b) => {
            cat.quiver.check_dim(&b)?;
            if cat.root_index(&b).is_none() {
                return Err(CliError::Usage(format!("{b} is not a positive root")));
            }
            vec![b]
        }
        None => cat.roots.clone(),
    };
    let table = ctx.table(&[Mode::Cohomology], Some(betas.clone()), Strategy::Sieve, true)?;
    let mut ok = true;
    let mut text = String::new();
    let mut rows = Vec::new();
    for b in &betas {
        let holds = check_conjecture(cat, b, &table)?;
        ok &= holds;
        let prov = table
            .provenance(b, Mode::Cohomology)
            .map(|p| p.to_string())
            .unwrap_or_default();
        text += &format!("{b} [{prov}]: {}\n", if holds { "pass" } else { "FAIL" });
        rows.push(json!({ "beta": dim_json(b), "provenance": prov, "holds": holds }));
    }
    text += if ok { "pass\n" } else { "FAIL\n" };
    Ok(Report {
        ok,
        text,
        json: json!({ "holds": ok, "roots": rows }),
    })
}

fn power_sum(q: &Quiver, i: usize, n: u32, k: i16) -> LaurentPoly {
    LaurentPoly::sum((1..=n).map(|s| LaurentPoly::monomial(Monomial::power(q.alpha(i, s), k))))
}

/// A short combination of products of power sums; negative powers and `y`
/// only in K-theory.
fn random_symmetric(q: &Quiver, d: &DimVector, mode: Mode, rng: &mut ChaCha8Rng) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for _ in 0..rng.gen_range(1..=2) {
        let mut term = LaurentPoly::integer(rng.gen_range(-3..=3));
        for i in 0..q.n_vertices() {
            if d[i] == 0 {
                continue;
            }
            let k = match mode {
                Mode::Cohomology => rng.gen_range(0..=1),
                Mode::KTheory => rng.gen_range(-1..=1),
            };
            term = term * power_sum(q, i, d[i], k);
        }
        if mode == Mode::KTheory && rng.gen_bool(0.5) {
            term = term * LaurentPoly::y();
        }
        out = out + term;
    }
    out
}

fn random_dim(n: usize, rng: &mut ChaCha8Rng) -> DimVector {
    loop {
        let d = DimVector((0..n).map(|_| rng.gen_range(0..=1)).collect());
        if !d.is_zero() {
            return d;
        }
    }
}

fn verify_associativity(ctx: &Context, samples: usize, max_total: u32) -> Result<Report, CliError> {
    let q = ctx.quiver();
    let mode = ctx.opts.mode;
    if max_total < 3 {
        return Err(CliError::Usage("--max-total must be at least 3".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.opts.seed);
    let mut ok = true;
    let mut text = String::new();
    let mut rows = Vec::new();
    for k in 0..samples {
        let gs = loop {
            let gs: Vec<DimVector> = (0..3).map(|_| random_dim(q.n_vertices(), &mut rng)).collect();
            let total = &(&gs[0] + &gs[1]) + &gs[2];
            if total.total() <= max_total && total.max_coord() <= ctx.opts.cutoff_limit {
                break gs;
            }
        };
        let fs: Vec<LaurentPoly> = gs.iter().map(|d| random_symmetric(q, d, mode, &mut rng)).collect();
        let ab = shuffle_product(q, &[(&gs[0], &fs[0]), (&gs[1], &fs[1])], mode)?;
        let bc = shuffle_product(q, &[(&gs[1], &fs[1]), (&gs[2], &fs[2])], mode)?;
        let g01 = &gs[0] + &gs[1];
        let g12 = &gs[1] + &gs[2];
        let left = shuffle_product(q, &[(&g01, &ab), (&gs[2], &fs[2])], mode)?;
        let right = shuffle_product(q, &[(&gs[0], &fs[0]), (&g12, &bc)], mode)?;
        let difference = left - right;
        let holds = difference.is_zero();
        if !holds {
            ok = false;
            text += &format!(
                "sample {} ({} {} {}): difference {difference}\n",
                k + 1,
                gs[0],
                gs[1],
                gs[2]
            );
        }
        let mut row = json!({ "dims": gs.iter().map(dim_json).collect::<Vec<_>>(), "holds": holds });
        if !holds {
            row["difference"] = poly_json(&difference);
        }
        rows.push(row);
    }
    let passed = rows.iter().filter(|r| r["holds"] == true).count();
    text += &format!(
        "associativity ({mode}): {passed}/{samples} samples {}\n",
        if ok { "pass" } else { "FAIL" }
    );
    Ok(Report {
        ok,
        text,
        json: json!({ "mode": mode.to_string(), "holds": ok, "samples": rows }),
    })
}
