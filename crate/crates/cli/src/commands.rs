use crate::{Cli, ClaimsCmd, Command, FamilyCmd, FamilyOut, Format, GlobalOpts, MethodArg, ModeArg};
use serde_json::{json, Value};
use std::fs;
use std::io::Read;
use std::path::Path;
use std::process::ExitCode;
use std::time::Duration;
use tsl_core::claims::{any_checker_error, registry, run_claims, strict_violations, Mode, Selection};
use tsl_core::coset::{group_order, EnumerationBudget};
use tsl_core::families::{
    b1_quotient, bieberbach_b1, coclass_ks, crystallographic_gn, gn_quotient, ks_quotient, FamilySpec,
};
use tsl_core::presentation::{parse_presentation, Presentation};
use tsl_core::tensor::{
    abelianization, diagram_report, methods_agree, tensor_square, Method, TensorReport, TensorSquareData,
};
use tsl_core::Error;

pub const EXIT_STRICT: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;
pub const EXIT_INTERNAL: u8 = 4;

/// Shown when the order is not certified within the budget.
const INFINITE_OR_BUDGET: &str = "INFINITE-OR-BUDGET";

pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            _ if e.is_budget() => EXIT_BUDGET,
            Error::InvariantViolation(_) => EXIT_INTERNAL,
            _ => EXIT_INPUT,
        };
        Failure::new(code, e.to_string())
    }
}

type Outcome = Result<ExitCode, Failure>;

pub fn run(cli: &Cli) -> Outcome {
    let g = &cli.global;
    let budget = budget(g)?;
    match &cli.command {
        Command::Describe { file } => describe(&read_presentation(file)?, g.format, budget),
        Command::Tensor { file, method } => tensor(&read_presentation(file)?, *method, g.format, budget),
        Command::Family { family: f } => family(f, g.format, budget),
        Command::Claims { action } => match action {
            ClaimsCmd::Run {
                only,
                mode,
                strict_consistent,
            } => claims(only.clone(), *mode, *strict_consistent, g.format, budget),
            ClaimsCmd::List => list_claims(g.format),
        },
    }
}

fn budget(g: &GlobalOpts) -> Result<EnumerationBudget, Failure> {
    Ok(EnumerationBudget::new(g.max_cosets, Duration::from_secs(g.max_time))?)
}

fn read_presentation(path: &Path) -> Result<Presentation, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::new(EXIT_INPUT, format!("reading standard input: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::new(EXIT_INPUT, format!("{}: {e}", path.display())))?
    };
    parse_presentation(&text).map_err(|e| Failure::new(EXIT_INPUT, format!("{}: {e}", path.display())))
}

fn print_json(v: &impl serde::Serialize) {
    println!("{}", serde_json::to_string_pretty(v).expect("reports serialize"));
}

fn describe(p: &Presentation, format: Format, budget: EnumerationBudget) -> Outcome {
    let ab = abelianization(p);
    let order = match group_order(p, budget) {
        Ok(n) => json!(n),
        Err(e) if e.is_budget() => json!(INFINITE_OR_BUDGET),
        Err(e) => return Err(e.into()),
    };
    let relators: Vec<String> = p.relators().iter().map(|w| p.format_word(w)).collect();
    match format {
        Format::Json => print_json(&json!({
            "name": p.name(),
            "generators": p.generators(),
            "relators": relators,
            "abelianization": ab,
            "order": order,
        })),
        Format::Text => {
            println!("group           {}", p.name());
            println!("generators      {}", p.generators().join(", "));
            println!("relators        {}", relators.join(", "));
            println!("abelianization  {ab}");
            match order {
                Value::String(s) => println!("order           {s}"),
                v => println!("order           {v}"),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn compute(p: &Presentation, method: Method, budget: EnumerationBudget) -> Result<TensorSquareData, Failure> {
    tensor_square(p, method, budget).map_err(|e| {
        let mut f = Failure::from(e);
        if f.code == EXIT_BUDGET {
            f.message.push_str(
                "\nhint: the tensor square needs a finite group; for an infinite family use a finite quotient, e.g. `tsl family gn --n 3 --mod 5 --tensor`",
            );
        }
        f
    })
}

fn tensor(p: &Presentation, method: MethodArg, format: Format, budget: EnumerationBudget) -> Outcome {
    let methods: &[Method] = match method {
        MethodArg::Nu => &[Method::Nu],
        MethodArg::Definitional => &[Method::Definitional],
        MethodArg::Both => &[Method::Nu, Method::Definitional],
    };
    let data = methods
        .iter()
        .map(|&m| compute(p, m, budget))
        .collect::<Result<Vec<_>, _>>()?;
    let reports: Vec<TensorReport> = data.iter().map(|d| TensorReport::new(p.name(), d)).collect();
    let agree = (data.len() == 2).then(|| methods_agree(&data[0], &data[1]));
    match format {
        Format::Json => match agree {
            Some(a) => print_json(&json!({ "reports": reports, "methods_agree": a })),
            None => print_json(&reports[0]),
        },
        Format::Text => {
            for (i, r) in reports.iter().enumerate() {
                if i > 0 {
                    println!();
                }
                print!("{r}");
            }
            if let Some(a) = agree {
                println!("methods agree   {}", if a { "yes" } else { "NO" });
            }
        }
    }
    if data.iter().any(|d| diagram_report(d).identity_failed()) {
        return Err(Failure::new(EXIT_INTERNAL, "a diagram identity failed"));
    }
    if agree == Some(false) {
        return Err(Failure::new(EXIT_INTERNAL, "the two methods disagree"));
    }
    Ok(ExitCode::SUCCESS)
}

fn family(cmd: &FamilyCmd, format: Format, budget: EnumerationBudget) -> Outcome {
    let (spec, quotient, out): (FamilySpec, Option<Presentation>, &FamilyOut) = match cmd {
        FamilyCmd::Gn { n, modulus, out } => (
            crystallographic_gn(*n)?,
            modulus.map(|m| gn_quotient(*n, m)).transpose()?,
            out,
        ),
        FamilyCmd::Ks { p, s, mod_exp, out } => (
            coclass_ks(*p, *s)?,
            mod_exp.map(|k| ks_quotient(*p, *s, k)).transpose()?,
            out,
        ),
        FamilyCmd::B1 { n, modulus, out } => (
            bieberbach_b1(*n)?,
            modulus.map(|m| b1_quotient(*n, m)).transpose()?,
            out,
        ),
    };
    let pres = match &quotient {
        Some(q) => q.clone(),
        None => spec.presentation.clone().ok_or_else(|| Failure::new(EXIT_INPUT, "family has no presentation"))?,
    };
    if out.tensor {
        return tensor(&pres, out.method, format, budget);
    }
    let text = match format {
        Format::Json => {
            let mut v = serde_json::to_value(&spec).expect("family spec serializes");
            if let Some(q) = &quotient {
                v["quotient"] = json!(q.to_string());
            }
            serde_json::to_string_pretty(&v).expect("json value serializes") + "\n"
        }
        Format::Text => {
            let mut s = String::new();
            s.push_str(&format!("# family {:?} {}\n", spec.family, params_line(&spec)));
            s.push_str(&format!("# h claimed {}\n", spec.h_claimed));
            if let Some(ab) = &spec.abelianization_claimed {
                s.push_str(&format!("# abelianization claimed {ab}\n"));
            }
            if let Some(r) = spec.schur_rank_claimed {
                s.push_str(&format!("# Schur multiplier rank claimed {r}\n"));
            }
            if !spec.padic_generators.is_empty() {
                s.push_str(&format!("# p-adic generators {}\n", spec.padic_generators.join(", ")));
            }
            for note in &spec.notes {
                s.push_str(&format!("# {note}\n"));
            }
            s.push_str(&pres.to_string());
            if !s.ends_with('\n') {
                s.push('\n');
            }
            s
        }
    };
    match &out.output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::new(EXIT_INPUT, format!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn params_line(spec: &FamilySpec) -> String {
    spec.params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn claims(only: Option<Vec<String>>, mode: ModeArg, strict: bool, format: Format, budget: EnumerationBudget) -> Outcome {
    let mode = match mode {
        ModeArg::Exact => Some(Mode::Exact),
        ModeArg::Symbolic => Some(Mode::Symbolic),
        ModeArg::Quotient => Some(Mode::Quotient),
        ModeArg::All => None,
    };
    let only = only.map(|ids| ids.into_iter().map(|s| s.trim().to_uppercase()).collect());
    let reports = run_claims(&Selection { only, mode }, budget)?;
    match format {
        Format::Json => print_json(&reports),
        Format::Text => {
            for r in &reports {
                println!("{r}");
            }
        }
    }
    if any_checker_error(&reports) {
        return Err(Failure::new(EXIT_INTERNAL, "a checker failed"));
    }
    if strict {
        let bad = strict_violations(&reports);
        if !bad.is_empty() {
            return Err(Failure::new(
                EXIT_STRICT,
                format!("MISMATCH outside the known discrepancies: {}", bad.join(", ")),
            ));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn list_claims(format: Format) -> Outcome {
    let claims = registry();
    match format {
        Format::Json => {
            let v: Vec<Value> = claims
                .iter()
                .map(|c| {
                    json!({
                        "id": c.id,
                        "statement": c.statement,
                        "locator": c.locator,
                        "quote": c.quote,
                        "modes": c.modes(),
                        "known_discrepancy": c.known_discrepancy,
                    })
                })
                .collect();
            print_json(&v);
        }
        Format::Text => {
            for c in &claims {
                let modes: Vec<String> = c.modes().iter().map(|m| m.to_string()).collect();
                println!("{} [{}] {}", c.id, modes.join(", "), c.statement);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
