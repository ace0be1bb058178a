use std::process::ExitCode;

use clap::{Parser, Subcommand};

use derivkit::derivpolys::{
    alternating_pair, derivative_pair, expand_p_in_q, expand_q_in_p, hyperbolic_pair,
    p_basis_coords, BasisExpansion, PolyBasis,
};
use derivkit::emit::{self, EmitFormat};
use derivkit::error::Error;
use derivkit::eulerian::{chebyshev, eulerian_a, eulerian_b, gamma_vector, ChebKind, GammaKind};
use derivkit::exactmath::{rat_int, DensePoly};
use derivkit::oracles::{self, StatKind};
use derivkit::sequences::{sequence_table, SequenceKind};
use derivkit::verify::{registry, verify, verify_all_capped, RangeScale, VerificationReport};

#[derive(Parser)]
#[command(
    name = "derivkit",
    version,
    about = "Exact arithmetic for derivative polynomials, Eulerian polynomials and their number sequences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one member of a polynomial family (P, Q, Phyp, Qhyp, p, q, A, B, T, U)
    Poly {
        /// Family tag; case-sensitive (P/Q trigonometric, p/q alternating)
        family: String,
        #[arg(long)]
        n: usize,
        /// Output format: csv, json or latex
        #[arg(long, default_value = "latex")]
        format: String,
    },
    /// Print a prefix of a named sequence (euler, bernoulli, springer, tangent, secant)
    Seq {
        kind: String,
        /// Number of leading entries, indices 0..count-1
        #[arg(long)]
        count: usize,
        #[arg(long, default_value = "latex")]
        format: String,
    },
    /// Print a basis expansion or gamma vector (QinP, PinQ, gammaA, gammaB, basisP)
    Expand {
        kind: String,
        #[arg(long)]
        n: usize,
    },
    /// Check registered identities exactly over index ranges
    Verify {
        /// One identity by registry name
        #[arg(long, conflicts_with = "all")]
        identity: Option<String>,
        /// Sweep the whole registry
        #[arg(long)]
        all: bool,
        /// Clamp the upper index of the sweep
        #[arg(long)]
        max_n: Option<u32>,
        /// Range preset: small, default or large
        #[arg(long, default_value = "default")]
        scale: String,
    },
    /// Run a brute-force enumeration oracle
    Oracle {
        /// alternating, descents, typeB, snakes, peaks or leftpeaks
        kind: String,
        #[arg(long)]
        n: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            if matches!(err, Error::UnknownIdentity(_)) {
                let names: Vec<&str> = registry().iter().map(|d| d.name).collect();
                eprintln!("known identities: {}", names.join(", "));
            }
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Poly { family, n, format } => {
            let format: EmitFormat = format.parse()?;
            let poly = family_member(&family, n)?;
            print!(
                "{}",
                with_newline(emit::emit_poly(&family, n as i64, &poly, format))
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Seq {
            kind,
            count,
            format,
        } => {
            let format: EmitFormat = format.parse()?;
            let kind: SequenceKind = kind.parse()?;
            let table = sequence_table(kind, count);
            print!("{}", with_newline(emit::emit_sequence(&table, format)));
            Ok(ExitCode::SUCCESS)
        }
        Command::Expand { kind, n } => {
            print_expansion(&kind, n)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            identity,
            all,
            max_n,
            scale,
        } => {
            let scale: RangeScale = scale.parse()?;
            let reports = if all {
                verify_all_capped(scale, max_n)
            } else if let Some(name) = identity {
                let desc = derivkit::verify::descriptor(&name)
                    .ok_or_else(|| Error::UnknownIdentity(name.clone()))?;
                let (lo, hi) = derivkit::verify::scaled_range(desc, scale);
                let range = max_n
                    .map(|cap| (lo, cap.min(hi).max(lo)))
                    .unwrap_or((lo, hi));
                vec![verify(&name, Some(range))?]
            } else {
                return Err(Error::Parse(
                    "pass --identity <name> or --all (names: see `derivkit verify --help`)".into(),
                ));
            };
            let all_passed = print_reports(&reports);
            Ok(if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Oracle { kind, n } => {
            print_oracle(&kind, n)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn family_member(family: &str, n: usize) -> Result<DensePoly, Error> {
    Ok(match family {
        "P" => derivative_pair(n).p,
        "Q" => derivative_pair(n).q,
        "Phyp" => hyperbolic_pair(n).p,
        "Qhyp" => hyperbolic_pair(n).q,
        "p" => alternating_pair(n).p,
        "q" => alternating_pair(n).q,
        "A" => eulerian_a(n),
        "B" => eulerian_b(n),
        "T" => chebyshev(ChebKind::T, n),
        "U" => chebyshev(ChebKind::U, n),
        other => return Err(Error::Parse(format!(
            "unknown polynomial family `{other}` (expected P, Q, Phyp, Qhyp, p, q, A, B, T or U)"
        ))),
    })
}

fn print_expansion(kind: &str, n: usize) -> Result<(), Error> {
    match kind {
        "QinP" => print_basis_expansion(&format!("Q_{n}"), &expand_q_in_p(n)),
        "PinQ" => print_basis_expansion(&format!("P_{n}"), &expand_p_in_q(n)),
        "basisP" => {
            let monomial = DensePoly::monomial(rat_int(1), n);
            print_basis_expansion(&format!("x^{n}"), &p_basis_coords(&monomial));
        }
        "gammaA" => {
            let g = gamma_vector(GammaKind::TypeA, n)?;
            for (j, v) in g.gamma.iter().enumerate() {
                println!("a({n},{}) = {v}", j + 1);
            }
        }
        "gammaB" => {
            let g = gamma_vector(GammaKind::TypeB, n)?;
            for (k, v) in g.gamma.iter().enumerate() {
                println!("b({n},{k}) = {v}");
            }
        }
        other => {
            return Err(Error::Parse(format!(
                "unknown expansion `{other}` (expected QinP, PinQ, gammaA, gammaB or basisP)"
            )))
        }
    }
    Ok(())
}

fn print_basis_expansion(lhs: &str, expansion: &BasisExpansion) {
    let tag = match expansion.basis {
        PolyBasis::TangentP => "P",
        PolyBasis::SecantQ => "Q",
    };
    if expansion.coords.is_empty() {
        println!("{lhs} = 0");
        return;
    }
    let mut terms = Vec::new();
    for (&i, c) in expansion.coords.iter().rev() {
        terms.push(format!("({c})*{tag}_{i}"));
    }
    println!("{lhs} = {}", terms.join(" + "));
}

fn print_reports(reports: &[VerificationReport]) -> bool {
    let mut all_passed = true;
    for report in reports {
        let desc = registry()
            .iter()
            .find(|d| d.name == report.identity)
            .expect("report comes from the registry");
        let idx = desc.index_kind.label();
        if report.passed() {
            println!(
                "PASS {:<24} {idx}={}..={}  ({:.1?})",
                report.identity, report.checked_range.0, report.checked_range.1, report.elapsed
            );
        } else {
            all_passed = false;
            let first = &report.failures[0];
            println!(
                "FAIL {:<24} {idx}={}..={}  {} failing index(es); first at {idx}={}: {}",
                report.identity,
                report.checked_range.0,
                report.checked_range.1,
                report.failures.len(),
                first.index,
                first.difference
            );
        }
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    println!("{passed}/{} identities passed", reports.len());
    all_passed
}

fn print_oracle(kind: &str, n: usize) -> Result<(), Error> {
    let stat: StatKind = kind.parse()?;
    match stat {
        StatKind::Alternating => println!("{}", oracles::count_alternating(n)?),
        StatKind::Snake => println!("{}", oracles::count_snakes(n)?),
        StatKind::Descents => println!("{}", emit::poly_latex(&oracles::descent_polynomial(n)?)),
        StatKind::TypeBDescents => println!(
            "{}",
            emit::poly_latex(&oracles::type_b_descent_polynomial(n)?)
        ),
        StatKind::PeaksNoDoubleDescents | StatKind::LeftPeaks => {
            let histogram = oracles::statistic_histogram(stat, n)?;
            for (k, count) in &histogram.histogram {
                println!("{k}: {count}");
            }
        }
    }
    Ok(())
}
