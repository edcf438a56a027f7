//! census: exact calculators and census tables for linearly normal space
//! curves with small index of speciality.
//!
//! Exit codes: 0 on success, 2 on precondition or parse errors. With
//! --json, errors are emitted as machine-readable JSON on stderr.

use clap::{Parser, Subcommand};
use serde_json::json;

use curvecensus::census::{residual_status, ResidualStatus};
use curvecensus::cubic::{classify_cubic_classes, cubic_residual, schwartz_a_range};
use curvecensus::error::Error;
use curvecensus::gonal::{compounded_cases, existence_recipe};
use curvecensus::invariants::{castelnuovo_pi, castelnuovo_pi1_r3, chi_min, lambda, rho};
use curvecensus::liaison::{linkage_dimension_account, linked_genus, surfaces_through};
use curvecensus::models::{
    enumerate_quadric_models, residual_class_quadric, residual_embedding_class, resolved_class,
};
use curvecensus::surfaces::{
    contracted_multisecant, criterion_only, intersect_blowup, intersect_quadric, is_very_ample,
    neg_curves, pa_blowup, pa_quadric,
};
use curvecensus::{component_dims, table, verdict, BlowupClass, QuadricClass, TableFamily, Triple, SCHEMA};

#[derive(Parser)]
#[command(name = "census", version, about = "exact invariants and census tables for linearly normal space curves")]
struct Cli {
    /// Emit JSON on stdout (and JSON errors on stderr).
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Numerical invariants of a triple (d, g, r): rho, lambda, chi_min,
    /// alpha and the Castelnuovo bounds. Always JSON.
    Invariants { d: i64, g: i64, r: i64 },
    /// Existence/irreducibility verdict for a triple.
    Verdict { d: i64, g: i64, r: i64 },
    /// One of the three census tables.
    Table {
        /// r+8, r+9 or gg4.
        #[arg(long)]
        family: String,
        /// Render Markdown (the default).
        #[arg(long)]
        md: bool,
    },
    /// Candidate quadric models of a degree-e genus-g web, with blow-up
    /// transforms and residual classes inline.
    QuadricModels {
        #[arg(long)]
        e: i64,
        #[arg(long)]
        g: i64,
    },
    /// Classes on the smooth cubic surface with given space degree and genus.
    CubicClassify {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        g: i64,
    },
    /// The (-1)-curves of the rank-n blow-up lattice.
    NegCurves {
        #[arg(long)]
        n: usize,
    },
    /// Line criterion for very ampleness of a blow-up class.
    VeryAmple {
        #[arg(long = "class")]
        class: String,
    },
    /// Arithmetic genus of a divisor class, quadric "(a,b)" or blow-up
    /// "(a;b1,...,bn)".
    Genus {
        #[arg(long = "class")]
        class: String,
    },
    /// Intersection product of two classes on the same surface.
    Intersect {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Gonality pencil recipe certifying a very ample web of degree g+r-4.
    Recipe {
        #[arg(long)]
        g: i64,
        #[arg(long)]
        r: i64,
    },
    /// Splittings (k, f) of a compounded degree-e web.
    Compounded {
        #[arg(long)]
        e: i64,
    },
    /// Linkage through a complete intersection of degrees (s, t), with the
    /// optional Grassmannian dimension account.
    Liaison {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        g: i64,
        #[arg(long)]
        s: i64,
        #[arg(long)]
        t: i64,
        #[arg(long = "dim-residual")]
        dim_residual: Option<i64>,
    },
}

enum ClassArg {
    Quadric(QuadricClass),
    Blowup(BlowupClass),
}

fn parse_class(s: &str) -> Result<ClassArg, Error> {
    if s.contains(';') {
        Ok(ClassArg::Blowup(s.parse()?))
    } else {
        Ok(ClassArg::Quadric(s.parse()?))
    }
}

fn main() {
    let cli = Cli::parse();
    if let Err(err) = run(&cli) {
        if cli.json {
            let payload = json!({"error": {"kind": err.kind(), "message": err.to_string()}});
            eprintln!("{payload}");
        } else {
            eprintln!("error: {err}");
        }
        std::process::exit(2);
    }
}

fn run(cli: &Cli) -> Result<(), Error> {
    match &cli.cmd {
        Cmd::Invariants { d, g, r } => invariants_cmd(*d, *g, *r),
        Cmd::Verdict { d, g, r } => verdict_cmd(*d, *g, *r, cli.json),
        Cmd::Table { family, md } => table_cmd(family, *md, cli.json),
        Cmd::QuadricModels { e, g } => quadric_models_cmd(*e, *g, cli.json),
        Cmd::CubicClassify { d, g } => cubic_classify_cmd(*d, *g, cli.json),
        Cmd::NegCurves { n } => neg_curves_cmd(*n, cli.json),
        Cmd::VeryAmple { class } => very_ample_cmd(class, cli.json),
        Cmd::Genus { class } => genus_cmd(class, cli.json),
        Cmd::Intersect { x, y } => intersect_cmd(x, y, cli.json),
        Cmd::Recipe { g, r } => recipe_cmd(*g, *r, cli.json),
        Cmd::Compounded { e } => compounded_cmd(*e, cli.json),
        Cmd::Liaison { d, g, s, t, dim_residual } => {
            liaison_cmd(*d, *g, *s, *t, *dim_residual, cli.json)
        }
    }
}

fn invariants_cmd(d: i64, g: i64, r: i64) -> Result<(), Error> {
    let t = Triple::new(d, g, r)?;
    let mut payload = json!({
        "schema": SCHEMA,
        "d": d,
        "g": g,
        "r": r,
        "alpha": t.alpha(),
        "rho": rho(t),
        "lambda": lambda(t),
        "chi_min": chi_min(t),
        "pi": castelnuovo_pi(d, r).ok(),
    });
    if r == 3 && d >= 7 {
        payload["pi1_r3"] = json!(castelnuovo_pi1_r3(d)?);
    }
    println!("{}", serde_json::to_string_pretty(&payload).expect("serializable"));
    Ok(())
}

fn verdict_cmd(d: i64, g: i64, r: i64, json: bool) -> Result<(), Error> {
    let v = verdict(Triple::new(d, g, r)?)?;
    if json {
        println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
        return Ok(());
    }
    let tri = |s| match s {
        curvecensus::TriState::Yes => "yes",
        curvecensus::TriState::No => "no",
        curvecensus::TriState::Unknown => "unknown",
    };
    println!("triple ({d},{g},{r})  alpha = {}", v.alpha);
    println!("exists: {}  irreducible: {}", tri(v.exists), tri(v.irreducible));
    for (desc, dim) in component_dims(Triple::new(d, g, r)?)? {
        println!("  component [dim {dim}]: {desc}");
    }
    for c in v.components.iter().filter(|c| c.is_component == curvecensus::TriState::No) {
        println!("  non-component family: {}", c.description);
    }
    for note in &v.notes {
        println!("  note: {note}");
    }
    for cite in &v.citations {
        println!("  anchor: {cite}");
    }
    Ok(())
}

fn table_cmd(family: &str, _md: bool, json: bool) -> Result<(), Error> {
    let fam: TableFamily = family.parse()?;
    let doc = table(fam)?;
    if json {
        println!("{}", doc.to_json());
    } else {
        print!("{}", doc.to_markdown());
    }
    Ok(())
}

fn quadric_models_cmd(e: i64, g: i64, json: bool) -> Result<(), Error> {
    let models = enumerate_quadric_models(e, g)?;
    let mut rows = Vec::new();
    for m in &models {
        let resolved = resolved_class(m).ok().flatten();
        let residual = match resolved {
            Some(_) => residual_embedding_class(m).ok().flatten().map(|c| c.to_string()),
            None if m.blowup_rank() == 1 => Some(residual_class_quadric(m.cls).to_string()),
            None => None,
        };
        let (status, witness) = match residual_status(m)? {
            ResidualStatus::VeryAmple => ("very-ample", None),
            ResidualStatus::NotVeryAmple(w) => ("not-very-ample", w.map(|c| c.to_string())),
            ResidualStatus::Undecided => ("undecided", None),
        };
        rows.push(json!({
            "surface": if m.blowup_rank() == 1 { "quadric" } else { "blowup-of-quadric" },
            "class": m.cls.to_string(),
            "delta": m.delta,
            "base_points": m.base_points,
            "e": m.e,
            "g": m.g,
            "compounded_or_degenerate": m.compounded_or_degenerate,
            "resolved_class": resolved.map(|c| c.to_string()),
            "residual": residual,
            "residual_status": status,
            "witness": witness,
        }));
    }
    if json {
        let payload = json!({"schema": SCHEMA, "e": e, "g": g, "models": rows});
        println!("{}", serde_json::to_string_pretty(&payload).expect("serializable"));
        return Ok(());
    }
    println!("models of degree e = {e}, genus g = {g}: {}", models.len());
    for row in &rows {
        println!(
            "  {} delta={} base_points={} resolved={} residual={} [{}]",
            row["class"].as_str().unwrap(),
            row["delta"],
            row["base_points"],
            row["resolved_class"].as_str().unwrap_or("-"),
            row["residual"].as_str().unwrap_or("-"),
            row["residual_status"].as_str().unwrap(),
        );
    }
    Ok(())
}

fn cubic_classify_cmd(d: i64, g: i64, json: bool) -> Result<(), Error> {
    let sols = classify_cubic_classes(d, g)?;
    let a_range = schwartz_a_range(d, g);
    let mut rows = Vec::new();
    for s in &sols {
        let res = cubic_residual(&s.cls)?;
        let witness = contracted_multisecant(&res, &s.cls).map(|w| w.to_string());
        let h0 = curvecensus::surfaces::expected_h0_blowup(&s.cls).ok();
        rows.push(json!({
            "class": s.cls.to_string(),
            "degree": s.d,
            "genus": s.g,
            "orbit_size": s.orbit_size,
            "line": s.line.as_ref().map(|l| l.to_string()),
            "residual": res.to_string(),
            "witness": witness,
            "h0": h0,
        }));
    }
    if json {
        let payload = json!({
            "schema": SCHEMA,
            "d": d,
            "g": g,
            "a_range": a_range.map(|(lo, hi)| vec![lo, hi]),
            "solutions": rows,
        });
        println!("{}", serde_json::to_string_pretty(&payload).expect("serializable"));
        return Ok(());
    }
    match a_range {
        Some((lo, hi)) => println!("degree {d}, genus {g}: a in [{lo},{hi}], {} classes", sols.len()),
        None => println!("degree {d}, genus {g}: the pruning bound excludes every a"),
    }
    for row in &rows {
        println!(
            "  {} orbit={} line={} residual={} witness={} h0={}",
            row["class"].as_str().unwrap(),
            row["orbit_size"],
            row["line"].as_str().unwrap_or("-"),
            row["residual"].as_str().unwrap(),
            row["witness"].as_str().unwrap_or("-"),
            row["h0"],
        );
    }
    Ok(())
}

fn neg_curves_cmd(n: usize, json: bool) -> Result<(), Error> {
    let curves = neg_curves(n)?;
    if json {
        let payload = json!({
            "schema": SCHEMA,
            "n": n,
            "count": curves.len(),
            "criterion_only": criterion_only(n),
            "classes": curves.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        });
        println!("{}", serde_json::to_string_pretty(&payload).expect("serializable"));
        return Ok(());
    }
    println!("(-1)-curves on S_{n}: {}", curves.len());
    for c in curves {
        println!("  {c}");
    }
    Ok(())
}

fn very_ample_cmd(class: &str, json: bool) -> Result<(), Error> {
    let cls: BlowupClass = class.parse()?;
    let va = is_very_ample(&cls);
    let flag = criterion_only(cls.n());
    if json {
        let payload = json!({
            "schema": SCHEMA,
            "class": cls.to_string(),
            "lattice_rank": cls.n(),
            "very_ample": va,
            "criterion": "meets every (-1)-curve positively",
            "criterion_only": flag,
        });
        println!("{}", serde_json::to_string_pretty(&payload).expect("serializable"));
        return Ok(());
    }
    println!(
        "{cls}: {}{}",
        if va { "very ample" } else { "not very ample" },
        if flag { " (criterion-only: rank 7 or 8 lattice)" } else { "" }
    );
    Ok(())
}

fn genus_cmd(class: &str, json: bool) -> Result<(), Error> {
    let (kind, cls_str, genus) = match parse_class(class)? {
        ClassArg::Quadric(q) => ("quadric", q.to_string(), pa_quadric(q)?),
        ClassArg::Blowup(b) => ("blowup", b.to_string(), pa_blowup(&b)),
    };
    if json {
        let payload = json!({"schema": SCHEMA, "class": cls_str, "kind": kind, "genus": genus});
        println!("{}", serde_json::to_string_pretty(&payload).expect("serializable"));
    } else {
        println!("{cls_str}: genus {genus}");
    }
    Ok(())
}

fn intersect_cmd(x: &str, y: &str, json: bool) -> Result<(), Error> {
    let (kind, xs, ys, product) = match (parse_class(x)?, parse_class(y)?) {
        (ClassArg::Quadric(a), ClassArg::Quadric(b)) => {
            ("quadric", a.to_string(), b.to_string(), intersect_quadric(a, b))
        }
        (ClassArg::Blowup(a), ClassArg::Blowup(b)) => {
            ("blowup", a.to_string(), b.to_string(), intersect_blowup(&a, &b)?)
        }
        _ => {
            return Err(Error::Precondition(
                "cannot intersect classes on different surfaces".into(),
            ))
        }
    };
    if json {
        let payload = json!({"schema": SCHEMA, "kind": kind, "x": xs, "y": ys, "product": product});
        println!("{}", serde_json::to_string_pretty(&payload).expect("serializable"));
    } else {
        println!("{xs} . {ys} = {product}");
    }
    Ok(())
}

fn recipe_cmd(g: i64, r: i64, json: bool) -> Result<(), Error> {
    let recipe = existence_recipe(g, r);
    if json {
        let payload = json!({"schema": SCHEMA, "g": g, "r": r, "recipe": recipe});
        println!("{}", serde_json::to_string_pretty(&payload).expect("serializable"));
        return Ok(());
    }
    match recipe {
        None => println!("no gonality recipe applies to (g,r) = ({g},{r})"),
        Some(rec) => {
            println!(
                "(g,r) = ({g},{r}): k = {}, e = {} = 3k+{}, web |K - 3 g^1_{}{}| of degree {} and dimension {}",
                rec.k,
                rec.e,
                rec.extra_points,
                rec.k,
                match rec.extra_points {
                    0 => "".to_string(),
                    1 => " - q".to_string(),
                    _ => " - q - q'".to_string(),
                },
                rec.series_degree,
                rec.series_dim
            );
            for c in &rec.conditions {
                println!("  check: {} [{}]", c.name, if c.holds { "ok" } else { "FAIL" });
            }
            for a in &rec.assumptions {
                println!("  assumes: {a}");
            }
        }
    }
    Ok(())
}

fn compounded_cmd(e: i64, json: bool) -> Result<(), Error> {
    let cases = compounded_cases(e)?;
    if json {
        let payload = json!({"schema": SCHEMA, "e": e, "cases": cases});
        println!("{}", serde_json::to_string_pretty(&payload).expect("serializable"));
        return Ok(());
    }
    println!("compounded splittings of a degree-{e} web:");
    for c in &cases {
        println!("  (k,f) = ({},{}): {}", c.k, c.f, c.interpretation);
    }
    Ok(())
}

fn liaison_cmd(
    d: i64,
    g: i64,
    s: i64,
    t: i64,
    dim_residual: Option<i64>,
    json: bool,
) -> Result<(), Error> {
    let (e, h) = linked_genus(d, g, s, t)?;
    let q_src = surfaces_through(d, g, 4).ok();
    let q_res = surfaces_through(e, h, 4).ok();
    let account = match dim_residual {
        Some(dim) => Some(linkage_dimension_account(d, g, s, t, dim)?),
        None => None,
    };
    if json {
        let payload = json!({
            "schema": SCHEMA,
            "d": d, "g": g, "s": s, "t": t,
            "e": e, "h": h,
            "quartics_through_source": q_src,
            "quartics_through_residual": q_res,
            "account": account,
        });
        println!("{}", serde_json::to_string_pretty(&payload).expect("serializable"));
        return Ok(());
    }
    println!("({d},{g}) linked through a ({s},{t}) complete intersection to ({e},{h})");
    if let (Some(qs), Some(qr)) = (q_src, q_res) {
        println!("  quartics through source: {qs}, through residual: {qr}");
    }
    if let Some(acct) = account {
        println!(
            "  sigma = {} (fiber down G(1,{}) = {}), fiber up G(1,{}) = {}, component dim = {}",
            acct.sigma_dim,
            acct.quartics_through_residual - 1,
            acct.fiber_down,
            acct.quartics_through_source - 1,
            acct.fiber_up,
            acct.component_dim
        );
    }
    Ok(())
}
