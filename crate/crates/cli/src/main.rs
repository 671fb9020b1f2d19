use std::process::ExitCode;

use braidop::braids::{burau, BraidWord, FreeWord};
use braidop::exec::Execution;
use braidop::harness::{build_order_spec, compare, verify_invariance, HarnessReport, DEFAULT_DEPTH, DEFAULT_TRUNC};
use braidop::spectral::{certify_positive_burau, char_poly, eigen_signature, probe_sign_sequence, probe_values, Probe};
use braidop::threebraid::{murasugi_normal_form, VerdictRecord};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

/// Exact Burau spectra and order-preservation verdicts for braids.
#[derive(Parser)]
#[command(name = "braidop", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Braid word, e.g. "s1 s2^-1 s1^3"
    braid: String,
    /// Number of strands (default: largest generator index + 1)
    #[arg(short = 'n')]
    strands: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct HarnessOpts {
    #[arg(long, default_value_t = DEFAULT_DEPTH)]
    depth: usize,
    #[arg(long, default_value_t = DEFAULT_TRUNC)]
    trunc: i64,
}

#[derive(Subcommand)]
enum Command {
    /// Print the reduced Burau matrix
    Burau(Common),
    /// Characteristic polynomial of the Burau matrix
    Charpoly(Common),
    /// Signs of the Burau eigenvalues in the Puiseux field
    Eigensign(Common),
    /// Certify that all Burau eigenvalues are positive
    Certify(Common),
    /// Murasugi normal form of a 3-braid
    NormalForm(Common),
    /// Order-preservation verdict for a 3-braid
    Verdict(Common),
    /// Order-preservation verdict for the square of a 3-braid
    SquareVerdict(Common),
    /// Signs of the characteristic polynomial at monomials c·t^q
    Probe {
        #[command(flatten)]
        common: Common,
        /// Comma-separated monomials, e.g. "1,t^2,-t^1/2"
        #[arg(long)]
        at: String,
    },
    /// Compare two free words under the order built from a 3-braid
    Compare {
        #[command(flatten)]
        common: Common,
        w1: String,
        w2: String,
        #[command(flatten)]
        opts: HarnessOpts,
    },
    /// Check invariance of the order on random words
    Harness {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        opts: HarnessOpts,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 12)]
        max_len: usize,
        /// Run samples on one thread
        #[arg(long)]
        sequential: bool,
    },
}

type Outcome = Result<ExitCode, braidop::Error>;

fn emit<T: Serialize>(json: bool, value: &T, text: impl FnOnce() -> String) {
    if json {
        println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
    } else {
        println!("{}", text());
    }
}

fn braid_of(c: &Common) -> Result<BraidWord, braidop::Error> {
    BraidWord::parse(&c.braid, c.strands)
}

/// For the commands that only make sense in `B_3`.
fn three_braid_of(c: &Common) -> Result<BraidWord, braidop::Error> {
    BraidWord::parse(&c.braid, c.strands.or(Some(3)))
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Burau(c) => {
            let b = braid_of(&c)?;
            let m = burau(&b);
            emit(c.json, &json!({ "braid": b, "strands": b.strands(), "matrix": m }), || m.to_string());
        }
        Command::Charpoly(c) => {
            let b = braid_of(&c)?;
            let p = char_poly(&burau(&b));
            emit(c.json, &json!({ "braid": b, "strands": b.strands(), "char_poly": p }), || p.to_string());
        }
        Command::Eigensign(c) => {
            let b = braid_of(&c)?;
            let s = eigen_signature(&burau(&b))?;
            emit(c.json, &json!({ "braid": b, "strands": b.strands(), "signature": s }), || {
                format!("real {} positive {} negative {} nonreal {}", s.real, s.positive, s.negative, s.nonreal)
            });
        }
        Command::Certify(c) => {
            let b = braid_of(&c)?;
            let cert = certify_positive_burau(&b)?;
            emit(c.json, &cert, || {
                let mut out = format!(
                    "braid {} on {} strands\nchar poly {}\npositive eigenvalues {} of {}\n",
                    cert.braid,
                    cert.strands,
                    cert.char_poly,
                    cert.signature.positive,
                    cert.signature.degree()
                );
                for a in &cert.sturm {
                    out += &format!(
                        "factor {} (multiplicity {}): chain signs {} at -inf, 0, 1, +inf; {} positive, {} negative roots\n",
                        a.factor,
                        a.multiplicity,
                        a.signs.join(" "),
                        a.positive_roots,
                        a.negative_roots
                    );
                }
                out + &format!("verdict {}", cert.verdict)
            });
        }
        Command::NormalForm(c) => {
            let b = three_braid_of(&c)?;
            let nf = murasugi_normal_form(&b)?;
            emit(c.json, &json!({ "braid": b, "normal_form": nf, "text": nf.to_string() }), || nf.to_string());
        }
        Command::Verdict(c) => {
            let r = VerdictRecord::of(&three_braid_of(&c)?)?;
            emit(c.json, &r, || verdict_text(&r));
        }
        Command::SquareVerdict(c) => {
            let r = VerdictRecord::of_square(&three_braid_of(&c)?)?;
            emit(c.json, &r, || verdict_text(&r));
        }
        Command::Probe { common: c, at } => {
            let b = braid_of(&c)?;
            let probes = Probe::parse_list(&at)?;
            let p = char_poly(&burau(&b));
            let values = probe_values(&p, &probes)?;
            let signs = probe_sign_sequence(&p, &probes);
            let rows: Vec<_> = at
                .split(',')
                .zip(values.iter().zip(&signs))
                .map(|(label, (v, s))| {
                    let (e, coeff) = v.lowest_term().map(|(e, c)| (e.to_string(), c.to_string())).unzip();
                    json!({ "at": label.trim(), "sign": s, "lowest_coefficient": coeff, "lowest_exponent": e })
                })
                .collect();
            emit(c.json, &json!({ "braid": b, "strands": b.strands(), "char_poly": p, "probes": rows }), || {
                let mut out = String::new();
                for (label, (v, s)) in at.split(',').zip(values.iter().zip(&signs)) {
                    let lowest = v.lowest_term().map_or("0".to_string(), |(e, c)| format!("{c}·t^{e}"));
                    out += &format!("{}: {} (lowest term {lowest})\n", label.trim(), s.symbol());
                }
                out + &signs.iter().map(|s| s.symbol().to_string()).collect::<Vec<_>>().join(",")
            });
        }
        Command::Compare { common: c, w1, w2, opts } => {
            let b = three_braid_of(&c)?;
            let spec = build_order_spec(&b, opts.depth, opts.trunc)?;
            let x = FreeWord::parse(&w1, b.strands())?;
            let y = FreeWord::parse(&w2, b.strands())?;
            let s = compare(&x, &y, &spec)?;
            let relation = match s.value {
                braidop::coeff::Sign::Positive => "<",
                braidop::coeff::Sign::Negative => ">",
                braidop::coeff::Sign::Zero => "=",
                braidop::coeff::Sign::Indeterminate => "?",
            };
            emit(c.json, &json!({ "braid": b, "w1": x, "w2": y, "sign": s, "relation": relation }), || {
                format!("{x} {relation} {y}\nsign of w1^-1 w2: {s}")
            });
            if !s.is_determinate() {
                return Ok(ExitCode::from(3));
            }
        }
        Command::Harness { common: c, opts, samples, seed, max_len, sequential } => {
            let b = three_braid_of(&c)?;
            let spec = build_order_spec(&b, opts.depth, opts.trunc)?;
            let exec = if sequential { Execution::Sequential } else { Execution::default() };
            let r = verify_invariance(&b, &spec, samples, max_len, seed, exec)?;
            emit(c.json, &r, || {
                let modes: Vec<String> = r.indeterminate_by_mode.iter().map(|(m, n)| format!("{m} {n}")).collect();
                let mut out = format!(
                    "braid {} depth {} trunc {} seed {}\n{} samples, two checks each: {} pass, {} fail, {} indeterminate",
                    r.braid,
                    r.depth_cap,
                    r.trunc_order,
                    r.seed,
                    r.samples,
                    r.determinate_pass,
                    r.determinate_fail,
                    r.indeterminate()
                );
                if !modes.is_empty() {
                    out += &format!(" ({})", modes.join(", "));
                }
                for f in &r.failures {
                    out += &format!("\nfailure: {f}");
                }
                out
            });
            return Ok(ExitCode::from(harness_exit(&r)));
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// 1 on a soundness failure, 3 when indeterminate checks outnumber passes.
fn harness_exit(r: &HarnessReport) -> u8 {
    if r.determinate_fail > 0 {
        1
    } else if r.indeterminate() > r.determinate_pass {
        3
    } else {
        0
    }
}

fn verdict_text(r: &VerdictRecord) -> String {
    let mut out = format!("{}\nprovenance {}\nnormal form {}", r.status, r.provenance, r.normal_form);
    if let Some(c) = &r.certificate {
        out += &format!("\ncertificate: {} of {} eigenvalues positive", c.signature.positive, c.signature.degree());
    }
    out
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
