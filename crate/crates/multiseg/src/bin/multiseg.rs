use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use multiseg::oracle::{run_laws_with, run_on_input, RunOptions, RunReport, UniverseBounds};
use multiseg::{
    derivative, duality, epsilon_r, eta_vector, highest, integral, mw, parse_multisegment, parse_segment,
    Classification, DerivOutcome, Error, Multisegment, Segment, Side,
};

#[derive(Parser)]
#[command(name = "multiseg", version, about = "Derivatives, integrals and involutions of multisegments")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Classification the multisegment parametrizes.
    #[arg(long, global = true, default_value = "lang", value_parser = ["lang", "zel"])]
    class: String,
    /// Right or left derivatives and integrals.
    #[arg(long, global = true, default_value = "R", value_parser = ["R", "L", "r", "l"])]
    side: String,
    /// Segment such as "[a,b]" or "[a]".
    #[arg(long, global = true)]
    seg: Option<String>,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Print only essential output.
    #[arg(long, global = true)]
    quiet: bool,
}

#[derive(Subcommand)]
enum Command {
    /// St-derivative D_seg(m); prints `infinity` when it vanishes.
    Derive(Input),
    /// St-integral I_seg(m).
    Integrate(Input),
    /// Zelevinsky involution m^#.
    Involute(Input),
    /// One step of the Moeglin-Waldspurger algorithm.
    MwStep(Input),
    /// The map [a,b] -> [-b,-a] onto the dual line.
    Theta(Input),
    /// Exotic duality D_r(m), or D_r^seg(m) with --with-window.
    Dual {
        /// Defaults to a value large enough for m and --seg.
        #[arg(long)]
        r: Option<i64>,
        #[arg(long)]
        with_window: bool,
        #[command(flatten)]
        input: Input,
    },
    /// Highest derivative multisegment of Z(m) (zel) or L(m) (lang).
    Hd(Input),
    /// Multisegment of the highest Bernstein-Zelevinsky derivative.
    Bz(Input),
    /// Number of times D_seg applies before vanishing.
    Eps(Input),
    /// Epsilons of the left truncations of --seg.
    Eta(Input),
    /// Exhaustively checks the law registry.
    Check {
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        lo: i64,
        #[arg(long, default_value_t = 4, allow_hyphen_values = true)]
        hi: i64,
        #[arg(long, default_value_t = 4)]
        max_segs: usize,
        #[arg(long, default_value_t = 10)]
        max_len: i64,
        /// Comma-separated law ids; `family.` selects a family.
        #[arg(long)]
        law: Option<String>,
        #[arg(long)]
        jobs: Option<usize>,
        /// Replay the laws on this multisegment only.
        #[arg(long)]
        input: Option<String>,
        /// Do not treat laws with too few non-vacuous instances as failures.
        #[arg(long)]
        allow_dead: bool,
    },
}

#[derive(Args)]
struct Input {
    /// The multisegment, e.g. "[0,2]+[1,3]"; read from stdin when absent.
    multisegment: Option<String>,
}

enum Failure {
    Parse(String),
    Domain(String),
    Law(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Parse(e.to_string()),
            Error::Domain(_) => Failure::Domain(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match std::panic::catch_unwind(|| run(cli)) {
        Ok(Ok(out)) => {
            if !out.is_empty() {
                println!("{out}");
            }
            ExitCode::SUCCESS
        }
        Ok(Err(Failure::Parse(msg))) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Ok(Err(Failure::Domain(msg))) => {
            eprintln!("{msg}");
            ExitCode::from(2)
        }
        Ok(Err(Failure::Law(out))) => {
            println!("{out}");
            ExitCode::from(3)
        }
        Err(_) => ExitCode::from(3),
    }
}

fn read_input(input: &Input) -> Result<Multisegment, Failure> {
    let text = match &input.multisegment {
        Some(t) => t.clone(),
        None => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf).map_err(|e| Failure::Domain(format!("reading stdin: {e}")))?;
            buf
        }
    };
    Ok(parse_multisegment(text.trim())?)
}

fn need_seg(g: &Global) -> Result<Segment, Failure> {
    match &g.seg {
        Some(s) => Ok(parse_segment(s.trim())?),
        None => Err(Failure::Domain("this command needs --seg \"[a,b]\"".into())),
    }
}

fn class_side(g: &Global) -> (Classification, Side) {
    (g.class.parse().expect("validated by clap"), g.side.parse().expect("validated by clap"))
}

fn multiseg_out(g: &Global, m: &Multisegment) -> String {
    if g.json {
        json!({ "multisegment": m.to_string() }).to_string()
    } else {
        m.to_string()
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    let g = &cli.global;
    let (class, side) = class_side(g);
    Ok(match &cli.command {
        Command::Derive(input) => {
            let m = read_input(input)?;
            let out = derivative(&m, need_seg(g)?, class, side);
            match (&out, g.json) {
                (DerivOutcome::Finite(n), true) => json!({ "finite": n.to_string() }).to_string(),
                (DerivOutcome::Infinity, true) => json!({ "infinity": true }).to_string(),
                _ => out.to_string(),
            }
        }
        Command::Integrate(input) => {
            let m = read_input(input)?;
            multiseg_out(g, &integral(&m, need_seg(g)?, class, side))
        }
        Command::Involute(input) => multiseg_out(g, &mw::involution(&read_input(input)?)),
        Command::MwStep(input) => {
            let step = mw::mw_step(&read_input(input)?)?;
            let parts: Vec<String> = step.participating.iter().map(Segment::to_string).collect();
            if g.json {
                json!({
                    "first_segment": step.first_segment.to_string(),
                    "participating": parts,
                    "reduced": step.reduced.to_string(),
                })
                .to_string()
            } else {
                format!("first {}\nparticipating {}\nreduced {}", step.first_segment, parts.join(" "), step.reduced)
            }
        }
        Command::Theta(input) => multiseg_out(g, &read_input(input)?.theta()),
        Command::Dual { r, with_window, input } => {
            let m = read_input(input)?;
            let seg = g.seg.as_ref().map(|s| parse_segment(s.trim())).transpose()?;
            let r = match (r, seg) {
                (Some(r), _) => *r,
                (None, Some(d)) => duality::r0(&m, d),
                (None, None) => duality::r0(&m, Segment::point(m.min_start().unwrap_or(0))),
            };
            let out = if *with_window {
                let d = seg.ok_or_else(|| Failure::Domain("--with-window needs --seg".into()))?;
                duality::dual_dr_seg(&m, r, d)?
            } else {
                duality::dual_dr(&m, r)?
            };
            multiseg_out(g, &out)
        }
        Command::Hd(input) => {
            let m = read_input(input)?;
            let out = match class {
                Classification::Zel => highest::hd_zel(&m),
                Classification::Lang => highest::hd_of_l(&m),
            };
            multiseg_out(g, &out)
        }
        Command::Bz(input) => multiseg_out(g, &highest::bz_highest(&read_input(input)?, class)),
        Command::Eps(input) => {
            let n = epsilon_r(&read_input(input)?, need_seg(g)?, class, side);
            if g.json {
                json!({ "epsilon": n }).to_string()
            } else {
                n.to_string()
            }
        }
        Command::Eta(input) => {
            let v = eta_vector(&read_input(input)?, need_seg(g)?, class, side);
            if g.json {
                json!({ "eta": v }).to_string()
            } else {
                v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
            }
        }
        Command::Check { lo, hi, max_segs, max_len, law, jobs, input, allow_dead } => {
            let opts = RunOptions {
                filter: law.clone(),
                jobs: *jobs,
                require_min_fired: !allow_dead,
                ..RunOptions::default()
            };
            let report = match input {
                Some(text) => {
                    let m = parse_multisegment(text.trim())?;
                    let seg = g.seg.as_ref().map(|s| parse_segment(s.trim())).transpose()?;
                    run_on_input(&m, seg, &opts)
                }
                None => run_laws_with(&UniverseBounds::new(*lo, *hi, *max_segs, *max_len)?, &opts),
            };
            if report.laws.is_empty() {
                return Err(Failure::Domain(format!("no law matches {:?}", law.as_deref().unwrap_or(""))));
            }
            let text = render(g, &report);
            if report.ok() {
                text
            } else {
                return Err(Failure::Law(text));
            }
        }
    })
}

fn render(g: &Global, report: &RunReport) -> String {
    if g.json {
        return report.to_json_lines().trim_end().to_string();
    }
    let text = report.to_text();
    if !g.quiet {
        return text.trim_end().to_string();
    }
    let mut lines: Vec<&str> = Vec::new();
    let mut keep = false;
    for line in text.lines() {
        if line.starts_with("     ") {
            if keep {
                lines.push(line);
            }
            continue;
        }
        keep = !line.starts_with("PASS ") && !line.starts_with("universe ") && !line.starts_with("single input");
        if keep {
            lines.push(line);
        }
    }
    lines.join("\n")
}
