mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use triangle_words::classify::{classify_burnside, classify_honda};
use triangle_words::groups::{
    burnside_count_check, load_group_file, universal_witness, FiniteGroup, DEFAULT_ORDER_CAP,
};
use triangle_words::lattice::{multiplier_set, TriangleSignature};
use triangle_words::psl2::{numeric_search, orevkov_solvable, Angle, NumericConfig};
use triangle_words::residue::{crt_star, UnitResidue};
use triangle_words::words::{parse_letters, FreeProduct};
use triangle_words::Error;

use report::{Format, Report};

const CAP_ENV: &str = "TRIANGLE_WORDS_CAP";

#[derive(Parser)]
#[command(
    name = "triangle-words",
    version,
    about = "Triangle-signature classifications, witnesses and free-product words"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "plain")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether every group has the lifting property for (k,l,m,r), or (k,m,r) with --honda
    Classify(ClassifyArgs),
    /// Print the lattice multiplier set of (k,l,m)
    Multiplier(MultiplierArgs),
    /// Print a verified witness pair (g,h) in the finite von Dyck group of (k,l,m)
    Witness(WitnessArgs),
    /// Reduce a word of G * <b>
    Reduce(ReduceArgs),
    /// Check Burnside's class-counting identity for the s-th power map
    FiniteCheck(FiniteCheckArgs),
    /// Decide whether 1 lies in C_a C_b C_c in PSL2(R)
    Orevkov(OrevkovArgs),
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long)]
    honda: bool,
    #[arg(long)]
    k: u64,
    #[arg(long, required_unless_present = "honda", conflicts_with = "honda")]
    l: Option<u64>,
    #[arg(long)]
    m: u64,
    #[arg(long, allow_hyphen_values = true)]
    r: i64,
}

#[derive(Args)]
struct MultiplierArgs {
    #[arg(long)]
    k: u64,
    #[arg(long)]
    l: u64,
    #[arg(long)]
    m: u64,
    /// Also compare membership with the classify verdict for every unit
    #[arg(long)]
    check_theorem: bool,
}

#[derive(Args)]
struct WitnessArgs {
    #[arg(long)]
    k: u64,
    #[arg(long)]
    l: u64,
    #[arg(long)]
    m: u64,
    #[arg(long, allow_hyphen_values = true)]
    r: i64,
}

#[derive(Args)]
struct ReduceArgs {
    /// Group file (JSON with "permutations"/"degree" or "table")
    #[arg(long)]
    group: PathBuf,
    /// Word as tokens `g:<id>`, `b`, `b-`
    #[arg(
        required_unless_present = "word_file",
        conflicts_with = "word_file",
        allow_hyphen_values = true
    )]
    word: Option<String>,
    #[arg(long)]
    word_file: Option<PathBuf>,
}

#[derive(Args)]
struct FiniteCheckArgs {
    #[arg(long)]
    group: PathBuf,
    #[arg(long, allow_hyphen_values = true)]
    s: i64,
}

#[derive(Args)]
struct OrevkovArgs {
    #[arg(allow_hyphen_values = true)]
    a: String,
    #[arg(allow_hyphen_values = true)]
    b: String,
    #[arg(allow_hyphen_values = true)]
    c: String,
    /// Also run the floating-point conjugator search
    #[arg(long)]
    numeric: bool,
}

/// Verdicts map to exit codes 0/1; errors to 2, internal inconsistencies to 3.
enum Outcome {
    Yes(Report),
    No(Report),
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::InternalInconsistency(_) => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Classify(a) => classify(a),
        Command::Multiplier(a) => multiplier(a),
        Command::Witness(a) => witness(a),
        Command::Reduce(a) => reduce(a),
        Command::FiniteCheck(a) => finite_check(a),
        Command::Orevkov(a) => orevkov(a),
    };
    match result {
        Ok(Outcome::Yes(r)) => {
            println!("{}", r.render(cli.format));
            ExitCode::from(0)
        }
        Ok(Outcome::No(r)) => {
            println!("{}", r.render(cli.format));
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn verdict(yes: bool, r: Report) -> Outcome {
    if yes {
        Outcome::Yes(r)
    } else {
        Outcome::No(r)
    }
}

fn order_cap() -> Result<usize, Error> {
    match std::env::var(CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("{CAP_ENV}={v:?} is not a positive integer"))),
        Err(_) => Ok(DEFAULT_ORDER_CAP),
    }
}

fn load_group(path: &std::path::Path) -> Result<FiniteGroup, Error> {
    load_group_file(path, order_cap()?)
}

fn residue_fields(report: &mut Report, r: &UnitResidue) {
    report.field_as(
        "r",
        serde_json::json!({"value": r.value(), "modulus": r.modulus()}),
        r.to_string(),
    );
}

fn classify(a: &ClassifyArgs) -> Result<Outcome, Error> {
    let mut report = Report::new("classify");
    match a.l {
        Some(l) if !a.honda => {
            let sig = TriangleSignature::new(a.k, l, a.m)?;
            let r = UnitResidue::new(a.r, sig.lcm())?;
            let v = classify_burnside(a.k, l, a.m, &r)?;
            report
                .field("mode", "burnside")
                .field("signature", sig.to_string());
            residue_fields(&mut report, &r);
            report
                .field("universal", v.universal)
                .field("reason", v.reason.to_string());
            Ok(verdict(v.universal, report))
        }
        _ => {
            let sig = TriangleSignature::new(a.k, a.k, a.m)?;
            let r = UnitResidue::new(a.r, sig.lcm())?;
            let v = classify_honda(a.k, a.m, &r)?;
            report
                .field("mode", "honda")
                .field("signature", sig.to_string());
            residue_fields(&mut report, &r);
            match crt_star(a.k, a.m, &r) {
                Ok(star) => report.field("r_star", star.value()),
                Err(Error::StarUndefined { .. }) => report.field("r_star", serde_json::Value::Null),
                Err(e) => return Err(e),
            };
            report
                .field("universal", v.universal)
                .field("reason", v.reason.to_string());
            Ok(verdict(v.universal, report))
        }
    }
}

fn multiplier(a: &MultiplierArgs) -> Result<Outcome, Error> {
    let sig = TriangleSignature::new(a.k, a.l, a.m)?;
    let set: Vec<u64> = multiplier_set(&sig).iter().map(|r| r.value()).collect();
    let shown = set.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
    let mut report = Report::new("multiplier");
    report
        .field("signature", sig.to_string())
        .field("modulus", sig.lcm())
        .field_as("multiplier_set", set.clone(), format!("{{{shown}}}"))
        .field("size", set.len());
    if a.check_theorem {
        let mut disagreements = Vec::new();
        for r in triangle_words::residue::unit_group(sig.lcm() as i64)? {
            let universal = classify_burnside(a.k, a.l, a.m, &r)?.universal;
            if universal != set.contains(&r.value()) {
                disagreements.push(r.value());
            }
        }
        if !disagreements.is_empty() {
            return Err(Error::InternalInconsistency(format!(
                "multiplier set and classify disagree at r in {disagreements:?}"
            )));
        }
        report.field("theorem_agreement", true);
    }
    Ok(Outcome::Yes(report))
}

fn witness(a: &WitnessArgs) -> Result<Outcome, Error> {
    let sig = TriangleSignature::new(a.k, a.l, a.m)?;
    if !sig.is_spherical() {
        return Err(Error::NotFinite {
            k: a.k,
            l: a.l,
            m: a.m,
        });
    }
    let r = UnitResidue::new(a.r, sig.lcm())?;
    let (v, w) = universal_witness(a.k, a.l, a.m, &r)?;
    v.verify()?;
    let g = &v.group;
    let e = r.value() as i64;
    let ok = |b: bool| if b { "ok" } else { "FAILED" };
    let checks = [
        format!("a^{} = 1 {}", a.k, ok(g.pow(v.a, a.k as i64) == 0)),
        format!(
            "(a^-1 c)^{} = 1 {}",
            a.l,
            ok(g.pow(v.a_inv_c(), a.l as i64) == 0)
        ),
        format!("c^{} = 1 {}", a.m, ok(g.pow(v.c, a.m as i64) == 0)),
        format!(
            "<a,c> has order {} {}",
            g.order(),
            ok(g.generated_subgroup(&[v.a, v.c]).len() == g.order())
        ),
        format!(
            "a^{e} g (a^-1 c)^{e} g^-1 = h c^{e} h^-1 {}",
            ok(g.mul(g.pow(v.a, e), g.conj(w.g, g.pow(v.a_inv_c(), e)))
                == g.conj(w.h, g.pow(v.c, e)))
        ),
    ];
    if checks.iter().any(|c| c.ends_with("FAILED")) || !w.verify(&v) {
        return Err(Error::InternalInconsistency(format!(
            "witness re-verification failed: {checks:?}"
        )));
    }
    let mut report = Report::new("witness");
    report.field("signature", sig.to_string());
    residue_fields(&mut report, &r);
    report
        .field("group_order", g.order())
        .field("a", g.label(v.a))
        .field("c", g.label(v.c))
        .field("g", g.label(w.g))
        .field("h", g.label(w.h))
        .field("lhs", g.label(w.lhs))
        .field("rhs", g.label(w.rhs))
        .field("check", checks.to_vec());
    Ok(Outcome::Yes(report))
}

fn reduce(a: &ReduceArgs) -> Result<Outcome, Error> {
    let group = load_group(&a.group)?;
    let text = match (&a.word, &a.word_file) {
        (Some(w), _) => w.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)?,
        (None, None) => return Err(Error::Parse("no word given".into())),
    };
    let letters = parse_letters(&text)?;
    let fp = FreeProduct::new(&group);
    let w = fp.normalize(&letters)?;
    if fp.normalize(w.letters())? != w {
        return Err(Error::InternalInconsistency(
            "normal form is not stable under re-normalization".into(),
        ));
    }
    let mut report = Report::new("reduce");
    report
        .field("group_order", group.order())
        .field(
            "input",
            text.split_whitespace().collect::<Vec<_>>().join(" "),
        )
        .field("reduced", w.to_string())
        .field("length", w.length());
    Ok(Outcome::Yes(report))
}

fn finite_check(a: &FiniteCheckArgs) -> Result<Outcome, Error> {
    let group = load_group(&a.group)?;
    let holds = burnside_count_check(&group, a.s)?;
    let mut report = Report::new("finite-check");
    report
        .field("group_order", group.order())
        .field("exponent", group.exponent())
        .field("classes", group.num_classes())
        .field("s", a.s)
        .field("holds", holds);
    Ok(verdict(holds, report))
}

fn orevkov(a: &OrevkovArgs) -> Result<Outcome, Error> {
    let (x, y, z): (Angle, Angle, Angle) = (a.a.parse()?, a.b.parse()?, a.c.parse()?);
    let solvable = orevkov_solvable(x, y, z)?;
    let sum = x.ratio() + y.ratio() + z.ratio();
    let mut report = Report::new("orevkov");
    report
        .field_as(
            "angles",
            vec![x.to_string(), y.to_string(), z.to_string()],
            format!("{x} {y} {z}"),
        )
        .field("sum", sum.to_string())
        .field("solvable", solvable);
    if a.numeric {
        match numeric_search(x, y, z, &NumericConfig::default()) {
            Ok(found) => {
                if found.solvable != solvable {
                    return Err(Error::InternalInconsistency(format!(
                        "numeric search ({}) disagrees with the exact criterion ({solvable})",
                        found.solvable
                    )));
                }
                report
                    .field("numeric", found.solvable)
                    .field_as(
                        "numeric_residual",
                        found.residual,
                        format!("{:.3e}", found.residual),
                    )
                    .field_as("numeric_phi", found.phi, format!("{:.6}", found.phi))
                    .field_as("numeric_s", found.s, format!("{:.6}", found.s));
            }
            Err(Error::Inconclusive(msg)) => {
                report
                    .field("numeric", "inconclusive")
                    .field("numeric_note", msg);
            }
            Err(e) => return Err(e),
        }
    }
    Ok(verdict(solvable, report))
}
