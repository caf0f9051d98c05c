use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use capf_core::arith::prime_divisors;
use capf_core::builtin::parse_matrix;
use capf_core::cap::{CapChecker, Variant, Witness};
use capf_core::chief::{chief_series, classify};
use capf_core::fusion::{FusionSystem, SupersolvableVerdict};
use capf_core::structure::{SubgroupLabel, SubgroupLattice};
use capf_core::verify::{self, generate_corpus};
use capf_core::{build_group, enumerate_subgroups, Caps, Carrier, Error, FiniteGroup, GroupElementRep, GroupSpec};

#[derive(Parser)]
#[command(
    name = "capf",
    version,
    about = "Finite groups, cover-avoidance properties and fusion systems"
)]
struct Cli {
    /// Largest group the generator closure may produce.
    #[arg(long, env = "CAPF_ORDER_CAP", default_value_t = 2000, global = true)]
    order_cap: usize,
    /// Largest group whose subgroup lattice is enumerated.
    #[arg(long, env = "CAPF_LATTICE_CAP", default_value_t = 400, global = true)]
    lattice_cap: usize,
    /// Bound on the number of chief series enumerated.
    #[arg(long, env = "CAPF_SERIES_CAP", default_value_t = 100_000, global = true)]
    series_cap: usize,
    /// Worker threads for `verify` (default: available parallelism).
    #[arg(long, env = "CAPF_WORKERS", global = true)]
    workers: Option<usize>,
    #[arg(long, env = "CAPF_FORMAT", value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    JsonLines,
}

#[derive(Subcommand)]
enum Command {
    /// Order, normal subgroups, a chief series and class flags.
    Info {
        /// Builtin name (e.g. `SL(2,5)`) or path to a generator file.
        group: String,
    },
    /// Decide a cover-avoidance predicate for one subgroup.
    Cap {
        #[arg(long)]
        group: String,
        /// `gens:<g1>;<g2>...` (cycles or `a b c d` matrices) or `order:<n>,index:<k>`.
        #[arg(long)]
        subgroup: String,
        /// cap | partial | pcap:<p> | strong-cap | strong-pcap:<p>
        #[arg(long)]
        variant: String,
    },
    /// Fusion system of a Sylow p-subgroup.
    Fusion {
        #[arg(long)]
        group: String,
        #[arg(short = 'p')]
        prime: usize,
        #[arg(long)]
        strongly_closed: bool,
        #[arg(long)]
        essentials: bool,
        #[arg(long)]
        chain: bool,
    },
    /// Check a theorem (or `all`) over the corpus.
    Verify {
        theorem: String,
        #[arg(long)]
        corpus_max_order: usize,
        /// Print `ms=0` everywhere so reports are reproducible byte for byte.
        #[arg(long)]
        no_timings: bool,
    },
    /// Corpus utilities.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Subcommand)]
enum CorpusAction {
    /// Print the builtin grammar and the corpus up to an order.
    List {
        #[arg(long, default_value_t = 60)]
        max_order: usize,
    },
}

/// Collects output lines and prints them in the selected format.
struct Out {
    format: Format,
}

impl Out {
    /// `text` is the full text line; `fields` become a flat JSON object with
    /// `kind` added.
    fn line(&self, kind: &str, text: String, fields: Value) {
        match self.format {
            Format::Text => println!("{text}"),
            Format::JsonLines => {
                let mut map = Map::new();
                map.insert("kind".into(), Value::from(kind));
                if let Value::Object(f) = fields {
                    map.extend(f);
                }
                println!("{}", Value::Object(map));
            }
        }
    }
}

enum Failure {
    Usage(String),
    Engine(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

fn load_group(arg: &str, caps: &Caps) -> Result<FiniteGroup, Failure> {
    let spec = if Path::new(arg).is_file() {
        let text = std::fs::read_to_string(arg).map_err(|e| Failure::Usage(format!("{arg}: {e}")))?;
        GroupSpec::from_file_text(&text)?
    } else {
        arg.parse::<GroupSpec>()?
    };
    Ok(build_group(&spec, caps.order_cap)?)
}

fn lattice_for(g: &FiniteGroup, caps: &Caps) -> Result<SubgroupLattice, Failure> {
    Ok(enumerate_subgroups(g, caps.lattice_cap)?)
}

fn tf(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

fn label(l: &SubgroupLattice, i: usize) -> SubgroupLabel {
    l.label(i)
}

fn info(out: &Out, group: &str, caps: &Caps) -> Result<(), Failure> {
    let g = load_group(group, caps)?;
    let l = lattice_for(&g, caps)?;
    out.line(
        "group",
        format!("GROUP {} order={}", g.name(), g.order()),
        json!({"name": g.name(), "order": g.order()}),
    );
    out.line("subgroups", format!("SUBGROUPS {}", l.len()), json!({"count": l.len()}));
    for i in l.normal_indices() {
        let lab = label(&l, i);
        out.line(
            "normal",
            format!("NORMAL order={} index={}", lab.order, lab.index),
            json!({"order": lab.order, "index": lab.index}),
        );
    }
    for f in chief_series(&g, &l).factors(&l) {
        let (k, h) = (l.order_of(f.lower), l.order_of(f.upper));
        let pd: Vec<String> = prime_divisors(f.order).iter().map(usize::to_string).collect();
        out.line(
            "chief",
            format!("CHIEF {k} < {h} order={} pd={}", f.order, pd.join(",")),
            json!({"lower": k, "upper": h, "order": f.order, "pd": pd.join(",")}),
        );
    }
    let flags = classify(&g, &l);
    out.line(
        "flags",
        format!(
            "FLAGS solvable={} supersolvable={} nilpotent={} u_hypercentre={}",
            tf(flags.solvable),
            tf(flags.supersolvable),
            tf(flags.nilpotent),
            l.order_of(flags.u_hypercentre)
        ),
        json!({
            "solvable": flags.solvable,
            "supersolvable": flags.supersolvable,
            "nilpotent": flags.nilpotent,
            "u_hypercentre": l.order_of(flags.u_hypercentre),
        }),
    );
    for p in prime_divisors(g.order()) {
        let ps = flags.p_solvable[&p];
        let pss = flags.p_supersolvable[&p];
        let pn = flags.p_nilpotent[&p];
        out.line(
            "prime",
            format!(
                "PRIME p={p} sylow={} p_solvable={} p_supersolvable={} p_nilpotent={}",
                l.order_of(l.sylow(p)),
                tf(ps),
                tf(pss),
                tf(pn)
            ),
            json!({"p": p, "sylow": l.order_of(l.sylow(p)), "p_solvable": ps, "p_supersolvable": pss, "p_nilpotent": pn}),
        );
    }
    Ok(())
}

/// Resolves `gens:...` or `order:<n>,index:<k>` to a lattice index.
fn resolve_subgroup(g: &FiniteGroup, l: &SubgroupLattice, text: &str) -> Result<usize, Failure> {
    if let Some(gens) = text.strip_prefix("gens:") {
        let carrier = g.element(0).carrier();
        let mut idx = Vec::new();
        for piece in gens.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let rep = match carrier {
                Carrier::Permutation { degree } => GroupElementRep::from_cycles(piece, degree)?,
                Carrier::Matrix2 { modulus } => parse_matrix(piece, modulus)?,
            };
            let i = g
                .index_of(&rep)
                .ok_or_else(|| Failure::Usage(format!("`{piece}` is not an element of {}", g.name())))?;
            idx.push(i);
        }
        let h = g.subgroup_generated(&idx);
        return Ok(l.index_of(&h).expect("lattice is complete"));
    }
    let mut order = None;
    let mut index = None;
    for part in text.split(',') {
        match part.trim().split_once(':') {
            Some(("order", v)) => order = v.trim().parse::<usize>().ok(),
            Some(("index", v)) => index = v.trim().parse::<usize>().ok(),
            _ => return Err(Failure::Usage(format!("bad subgroup selector `{text}`"))),
        }
    }
    let (Some(order), Some(index)) = (order, index) else {
        return Err(Failure::Usage(format!("bad subgroup selector `{text}`")));
    };
    l.by_label(SubgroupLabel { order, index })
        .ok_or_else(|| Failure::Usage(format!("no subgroup {order}#{index}")))
}

fn cap(out: &Out, group: &str, subgroup: &str, variant: &str, caps: &Caps) -> Result<(), Failure> {
    let variant: Variant = variant.parse()?;
    let g = load_group(group, caps)?;
    let l = lattice_for(&g, caps)?;
    let a = resolve_subgroup(&g, &l, subgroup)?;
    let report = CapChecker::new(&g, &l).evaluate(a, variant);
    let subj = label(&l, a);
    out.line(
        "verdict",
        format!("VERDICT {}", tf(report.holds)),
        json!({"holds": report.holds, "variant": variant.to_string(), "subject": subj.to_string()}),
    );
    match report.witness {
        Some(Witness::Failure { overgroup, factor }) => {
            let over = label(&l, overgroup);
            let (k, h) = (l.order_of(factor.lower), l.order_of(factor.upper));
            out.line(
                "witness",
                format!("WITNESS overgroup={over} factor={k}-{h}"),
                json!({"overgroup": over.to_string(), "lower": k, "upper": h}),
            );
        }
        Some(Witness::Series(s)) => {
            let orders: Vec<String> = s.chain.iter().map(|&i| l.order_of(i).to_string()).collect();
            out.line(
                "series",
                format!("SERIES {}", orders.join(" ")),
                json!({"orders": orders.join(" ")}),
            );
        }
        None => {}
    }
    Ok(())
}

fn fusion(out: &Out, group: &str, p: usize, sc: bool, ess: bool, chain: bool, caps: &Caps) -> Result<(), Failure> {
    if !capf_core::arith::is_prime(p) {
        return Err(Failure::Usage(format!("-p {p} is not a prime")));
    }
    let g = load_group(group, caps)?;
    let l = lattice_for(&g, caps)?;
    let fs = FusionSystem::new(&g, &l, p);
    if sc {
        for q in fs.strongly_closed_subgroups() {
            let lab = label(&l, q);
            out.line(
                "strongly_closed",
                format!("SC order={} index={}", lab.order, lab.index),
                json!({"order": lab.order, "index": lab.index}),
            );
        }
    }
    if ess {
        for q in fs.essential_star_set(caps.lattice_cap)? {
            if q == fs.sylow() {
                continue;
            }
            let lab = label(&l, q);
            out.line(
                "essential",
                format!("ESSENTIAL order={} index={}", lab.order, lab.index),
                json!({"order": lab.order, "index": lab.index}),
            );
        }
    }
    let verdict = fs.supersolvable_chain();
    out.line(
        "supersolvable",
        format!("SUPERSOLVABLE {}", tf(verdict.holds())),
        json!({"holds": verdict.holds()}),
    );
    if chain {
        if let SupersolvableVerdict::Chain(c) = verdict {
            let orders: Vec<String> = c.chain.iter().map(|&i| l.order_of(i).to_string()).collect();
            out.line(
                "chain",
                format!("CHAIN {}", orders.join(" ")),
                json!({"orders": orders.join(" ")}),
            );
        }
    }
    Ok(())
}

fn run_verify(
    out: &Out,
    theorem: &str,
    max_order: usize,
    no_timings: bool,
    workers: usize,
    caps: &Caps,
) -> Result<bool, Failure> {
    let theorems = verify::select(theorem);
    if theorems.is_empty() {
        return Err(Failure::Usage(format!("unknown theorem `{theorem}`")));
    }
    let corpus = generate_corpus(max_order, caps.order_cap)?;
    let report = verify::verify(&theorems, &corpus, workers, *caps)?;
    let ids: Vec<&str> = theorems.iter().map(|t| t.id).collect();
    match out.format {
        Format::Text => print!("{}", report.render_text(&ids, !no_timings)),
        Format::JsonLines => {
            for v in &report.verdicts {
                let mut rec = json!({
                    "kind": if v.skipped.is_some() { "skip" } else { "verdict" },
                    "theorem": v.theorem_id,
                    "group": v.group_name,
                    "params": v.params_text(),
                    "hyp": v.hypothesis_holds,
                    "concl": v.conclusion_holds,
                    "ms": if no_timings { 0 } else { v.elapsed_ms },
                });
                if let Some(reason) = &v.skipped {
                    rec["reason"] = Value::from(reason.as_str());
                }
                if let Some(note) = &v.note {
                    rec["note"] = Value::from(note.as_str());
                }
                println!("{rec}");
            }
            for s in report.summaries(&ids) {
                println!(
                    "{}",
                    json!({
                        "kind": "summary",
                        "theorem": s.theorem_id,
                        "rows": s.rows,
                        "hyp_true": s.hypothesis_true,
                        "violations": s.violations,
                    })
                );
            }
        }
    }
    Ok(report.violations() == 0)
}

const GRAMMAR: &str =
    "C<n> | D<2n> | Q<4n> | S<n> (n<=6) | A<n> (n<=6) | SL(2,<p>) | GL(2,<p>) | C<p>:C<q> (q | p-1) | X x Y";

fn corpus_list(out: &Out, max_order: usize, caps: &Caps) -> Result<(), Failure> {
    out.line("grammar", format!("GRAMMAR {GRAMMAR}"), json!({"grammar": GRAMMAR}));
    let corpus = generate_corpus(max_order, caps.order_cap)?;
    for spec in &corpus.entries {
        let order = build_group(spec, caps.order_cap)?.order();
        out.line(
            "entry",
            format!("ENTRY {} order={order}", spec.name()),
            json!({"name": spec.name(), "order": order}),
        );
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let caps = Caps {
        order_cap: cli.order_cap,
        lattice_cap: cli.lattice_cap,
        series_cap: cli.series_cap,
    };
    if caps.order_cap == 0 || caps.lattice_cap == 0 || caps.series_cap == 0 {
        eprintln!("error: caps must be positive");
        return ExitCode::from(2);
    }
    let workers = cli
        .workers
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let out = Out { format: cli.format };
    let result = match cli.command {
        Command::Info { group } => info(&out, &group, &caps).map(|_| true),
        Command::Cap {
            group,
            subgroup,
            variant,
        } => cap(&out, &group, &subgroup, &variant, &caps).map(|_| true),
        Command::Fusion {
            group,
            prime,
            strongly_closed,
            essentials,
            chain,
        } => fusion(&out, &group, prime, strongly_closed, essentials, chain, &caps).map(|_| true),
        Command::Verify {
            theorem,
            corpus_max_order,
            no_timings,
        } => run_verify(&out, &theorem, corpus_max_order, no_timings, workers, &caps),
        Command::Corpus {
            action: CorpusAction::List { max_order },
        } => corpus_list(&out, max_order, &caps).map(|_| true),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Engine(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
