//! `sdcodes` command-line front end. Every computation is a library call;
//! this file only parses arguments and formats results.
//!
//! Exit status: 0 success, 1 negative answer (not a codeword, not
//! invariant, ...), 2 usage or parse error, 3 operation unavailable.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use sdcodes::config::{load_code_description, resolve_ring};
use sdcodes::skew::{is_invariant, lclm_linear, Invariance};
use sdcodes::wedderburn::{big_g, big_g0, certify_w_roots, is_w_polynomial, vandermonde_matrix};
use sdcodes::worked_examples;
use sdcodes::{
    DeltaKind, Error, Matrix, RingContext, RingElement, RingKind, SigmaDeltaCode, SigmaKind,
    SkewPoly,
};

#[derive(Parser)]
#[command(
    name = "sdcodes",
    version,
    about = "Skew polynomials over finite rings and cyclic (f, sigma, delta)-codes"
)]
struct Cli {
    /// Print polynomials and elements as literals instead of pretty forms.
    #[arg(long, global = true)]
    literal: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RingArg {
    /// Ring config file, or a shipped ring: f4, f8, f5x, tri2.
    #[arg(long, short)]
    ring: String,
}

#[derive(Args)]
struct CodeArg {
    /// Code description file with `ring`, `f` and `g` keys.
    code: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Describe a ring; `--exhaustive` also checks the Leibniz rule and
    /// searches for an inner witness of δ.
    RingCheck {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        exhaustive: bool,
    },
    /// Product p·q.
    Mul {
        #[command(flatten)]
        ring: RingArg,
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Right division f = q·g + r.
    Divr {
        #[command(flatten)]
        ring: RingArg,
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Left division f = g·q + r.
    Divl {
        #[command(flatten)]
        ring: RingArg,
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Right evaluation f(a).
    Eval {
        #[command(flatten)]
        ring: RingArg,
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Least left common multiple of t − a_i.
    Lclm {
        #[command(flatten)]
        ring: RingArg,
        #[arg(required = true, allow_hyphen_values = true)]
        points: Vec<String>,
    },
    /// Whether Rf is a two-sided ideal.
    Invariant {
        #[command(flatten)]
        ring: RingArg,
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Summary of a code.
    CodeBuild(CodeArg),
    /// Generator matrix.
    CodeGen(CodeArg),
    /// Control matrix.
    CodeControl(CodeArg),
    /// Encode a message given as `m_0 | m_1 | ...`.
    CodeEncode {
        #[command(flatten)]
        code: CodeArg,
        #[arg(allow_hyphen_values = true)]
        message: String,
    },
    /// Exit 0 for a codeword, 1 otherwise.
    CodeCheck {
        #[command(flatten)]
        code: CodeArg,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Remainder of c(t) by g.
    CodeSyndrome {
        #[command(flatten)]
        code: CodeArg,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Minimum distance by exhaustive encoding.
    CodeMindist(CodeArg),
    /// Monic right factors of degree r with their left cofactors.
    FactorSearch {
        #[command(flatten)]
        ring: RingArg,
        #[arg(allow_hyphen_values = true)]
        f: String,
        r: usize,
    },
    /// G = t^((p-1)n+1) − t, or G0 with `--g0`.
    #[command(name = "bigG")]
    BigG {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        g0: bool,
    },
    /// Exit 0 when g is a W-polynomial (a right factor of G).
    Wtest {
        #[command(flatten)]
        ring: RingArg,
        #[arg(allow_hyphen_values = true)]
        g: String,
        /// Also search for a certifying root set.
        #[arg(long)]
        certify: bool,
    },
    /// The n × r matrix N_i(a_j).
    Vandermonde {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long, short)]
        n: usize,
        #[arg(required = true, allow_hyphen_values = true)]
        roots: Vec<String>,
    },
    /// Replay the worked-example fixtures.
    PaperExamples,
}

enum Outcome {
    Yes(String),
    No(String),
}

struct Printer {
    literal: bool,
}

impl Printer {
    fn poly(&self, p: &SkewPoly) -> String {
        if self.literal {
            p.to_literal()
        } else {
            p.to_string()
        }
    }

    fn elem(&self, ctx: &RingContext, a: &RingElement) -> String {
        if self.literal {
            ctx.format_element(a)
        } else {
            ctx.pretty(a)
        }
    }

    fn vector(&self, ctx: &RingContext, v: &[RingElement]) -> String {
        v.iter()
            .map(|a| ctx.format_element(a))
            .collect::<Vec<_>>()
            .join(" | ")
    }
}

fn ring(arg: &RingArg) -> sdcodes::Result<Arc<RingContext>> {
    resolve_ring(&arg.ring, None)
}

fn code(arg: &CodeArg) -> sdcodes::Result<SigmaDeltaCode> {
    load_code_description(Path::new(&arg.code))
}

fn parse_vector(ctx: &Arc<RingContext>, text: &str) -> sdcodes::Result<Vec<RingElement>> {
    let m = Matrix::parse(ctx, text)?;
    if m.rows() != 1 {
        return Err(Error::Parse(format!(
            "expected one row vector, got {} rows",
            m.rows()
        )));
    }
    Ok(m.row(0).to_vec())
}

fn describe(ctx: &RingContext) -> String {
    let kind = match ctx.kind() {
        RingKind::PrimeField { p } => format!("prime_field p={p}"),
        RingKind::ExtensionField { p, n, modulus } => {
            format!("extension_field p={p} n={n} modulus={modulus:?}")
        }
        RingKind::QuotientRing { p, modulus } => format!("quotient_ring p={p} modulus={modulus:?}"),
        RingKind::TriangularRing { p, n, modulus } => {
            format!("triangular_ring p={p} n={n} modulus={modulus:?}")
        }
    };
    let sigma = match ctx.sigma_kind() {
        SigmaKind::Identity => "identity".to_string(),
        SigmaKind::FrobeniusPower(k) => format!("frobenius^{k}"),
        SigmaKind::EntrywiseFrobenius => "entrywise_frobenius".to_string(),
    };
    let order = ctx
        .sigma_order()
        .map_or("not invertible".to_string(), |o| format!("order {o}"));
    let delta = match ctx.delta_kind() {
        DeltaKind::Zero => "zero".to_string(),
        DeltaKind::FormalDdx => "ddx".to_string(),
        DeltaKind::Inner(c) => format!("inner:{}", ctx.format_element(c)),
        DeltaKind::Triangular => "triangular".to_string(),
    };
    format!(
        "kind: {kind}\nelements: {}\nfield: {}\nsigma: {sigma} ({order})\ndelta: {delta}",
        ctx.cardinality(),
        ctx.is_field()
    )
}

fn execute(command: Command, out: &Printer) -> sdcodes::Result<Outcome> {
    use Outcome::{No, Yes};
    Ok(match command {
        Command::RingCheck {
            ring: r,
            exhaustive,
        } => {
            let ctx = ring(&r)?;
            let mut text = describe(&ctx);
            if !exhaustive {
                return Ok(Yes(text));
            }
            let leibniz = ctx.satisfies_leibniz();
            text.push_str(&format!(
                "\nleibniz: {}",
                if leibniz { "ok" } else { "fails" }
            ));
            match ctx.inner_witness() {
                Some(m) => {
                    text.push_str(&format!("\ndelta inner: yes, m = {}", out.elem(&ctx, &m)))
                }
                None => text.push_str("\ndelta inner: no"),
            }
            if leibniz {
                Yes(text)
            } else {
                No(text)
            }
        }
        Command::Mul { ring: r, p, q } => {
            let ctx = ring(&r)?;
            let product = SkewPoly::parse(&ctx, &p)?.try_mul(&SkewPoly::parse(&ctx, &q)?)?;
            Yes(out.poly(&product))
        }
        Command::Divr { ring: r, f, g } => {
            let ctx = ring(&r)?;
            let (q, rem) = SkewPoly::parse(&ctx, &f)?.div_right(&SkewPoly::parse(&ctx, &g)?)?;
            Yes(format!("q = {}\nr = {}", out.poly(&q), out.poly(&rem)))
        }
        Command::Divl { ring: r, f, g } => {
            let ctx = ring(&r)?;
            let (q, rem) = SkewPoly::parse(&ctx, &f)?.div_left(&SkewPoly::parse(&ctx, &g)?)?;
            Yes(format!("q = {}\nr = {}", out.poly(&q), out.poly(&rem)))
        }
        Command::Eval { ring: r, f, a } => {
            let ctx = ring(&r)?;
            let value = SkewPoly::parse(&ctx, &f)?.eval_right(&ctx.parse_element(&a)?);
            Yes(out.elem(&ctx, &value))
        }
        Command::Lclm { ring: r, points } => {
            let ctx = ring(&r)?;
            let points = points
                .iter()
                .map(|s| ctx.parse_element(s))
                .collect::<sdcodes::Result<Vec<_>>>()?;
            Yes(out.poly(&lclm_linear(&ctx, &points)?))
        }
        Command::Invariant { ring: r, f } => {
            let ctx = ring(&r)?;
            match is_invariant(&SkewPoly::parse(&ctx, &f)?)? {
                Invariance::Invariant => Yes("invariant".into()),
                Invariance::NotInvariant => No("not invariant".into()),
                Invariance::RightInclusionOnly => {
                    No("right inclusion only: sigma is not invertible".into())
                }
            }
        }
        Command::CodeBuild(c) => {
            let code = code(&c)?;
            let h = code
                .h()
                .map_or_else(|| "unavailable".to_string(), |h| out.poly(h));
            let control = match code.control_matrix() {
                Ok(_) => "available".to_string(),
                Err(e) => e.to_string(),
            };
            Yes(format!(
                "length: {}\ndimension: {}\nf = {}\ng = {}\nh = {h}\nh' = {}\ncontrol matrix: {control}",
                code.length(),
                code.dimension(),
                out.poly(code.f()),
                out.poly(code.g()),
                out.poly(code.h_prime()),
            ))
        }
        Command::CodeGen(c) => Yes(code(&c)?
            .generator_matrix()
            .to_text()
            .trim_end()
            .to_string()),
        Command::CodeControl(c) => {
            Yes(code(&c)?.control_matrix()?.to_text().trim_end().to_string())
        }
        Command::CodeEncode { code: c, message } => {
            let code = code(&c)?;
            let msg = parse_vector(code.context(), &message)?;
            Yes(out.vector(code.context(), &code.encode(&msg)?))
        }
        Command::CodeCheck { code: c, word } => {
            let code = code(&c)?;
            let word = parse_vector(code.context(), &word)?;
            if code.is_codeword(&word)? {
                Yes("codeword".into())
            } else {
                No("not a codeword".into())
            }
        }
        Command::CodeSyndrome { code: c, word } => {
            let code = code(&c)?;
            let word = parse_vector(code.context(), &word)?;
            Yes(out.vector(code.context(), &code.syndrome(&word)?))
        }
        Command::CodeMindist(c) => Yes(code(&c)?.min_distance_bruteforce()?.to_string()),
        Command::FactorSearch {
            ring: r,
            f,
            r: degree,
        } => {
            let ctx = ring(&r)?;
            let pairs = sdcodes::search::factor_search(&SkewPoly::parse(&ctx, &f)?, degree)?;
            let lines: Vec<_> = pairs
                .iter()
                .map(|(g, h)| format!("g = {}; h = {}", out.poly(g), out.poly(h)))
                .collect();
            if lines.is_empty() {
                No("no factors".into())
            } else {
                Yes(lines.join("\n"))
            }
        }
        Command::BigG { ring: r, g0 } => {
            let ctx = ring(&r)?;
            Yes(out.poly(&if g0 { big_g0(&ctx)? } else { big_g(&ctx)? }))
        }
        Command::Wtest {
            ring: r,
            g,
            certify,
        } => {
            let ctx = ring(&r)?;
            let g = SkewPoly::parse(&ctx, &g)?;
            if !is_w_polynomial(&g)? {
                return Ok(No("not a W-polynomial".into()));
            }
            let mut text = "W-polynomial".to_string();
            if certify {
                match certify_w_roots(&g)? {
                    Some(roots) => {
                        let roots: Vec<_> = roots.iter().map(|a| out.elem(&ctx, a)).collect();
                        text.push_str(&format!("\nroots: {}", roots.join(", ")));
                    }
                    None => text.push_str("\nroots: none found"),
                }
            }
            Yes(text)
        }
        Command::Vandermonde { ring: r, n, roots } => {
            let ctx = ring(&r)?;
            let roots = roots
                .iter()
                .map(|s| ctx.parse_element(s))
                .collect::<sdcodes::Result<Vec<_>>>()?;
            if n == 0 {
                return Err(Error::Precondition("n must be >= 1".into()));
            }
            Yes(vandermonde_matrix(&ctx, &roots, n)
                .to_text()
                .trim_end()
                .to_string())
        }
        Command::PaperExamples => {
            let report = worked_examples::run_all();
            let text = report
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("\n");
            if worked_examples::all_passed(&report) {
                Yes(text)
            } else {
                No(text)
            }
        }
    })
}

fn exit_status(e: &Error) -> u8 {
    match e {
        Error::DivisionUnavailable(_)
        | Error::LeftDivisionUnavailable
        | Error::ControlMatrixUnavailable(_)
        | Error::BudgetExceeded { .. }
        | Error::NoNonzeroCodewords
        | Error::WrongRingKind(_)
        | Error::LclmStepFailed { .. } => 3,
        _ => 2,
    }
}

// a closed pipe (`| head`) is not an error worth reporting
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let printer = Printer {
        literal: cli.literal,
    };
    match execute(cli.command, &printer) {
        Ok(Outcome::Yes(text)) => {
            emit(&text);
            ExitCode::SUCCESS
        }
        Ok(Outcome::No(text)) => {
            emit(&text);
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_status(&e))
        }
    }
}
