use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use parkposet::enumeration::{
    chain_count_closed, chain_series, series_chain_count, whitney_first_closed, zeta_closed,
    ChainCountRow,
};
use parkposet::error::Error;
use parkposet::kdivisible::{build_nc_k, build_pp_k, edelman_divisible, k_prime_filter, Ambient};
use parkposet::parking::{Kind, ParkingObject};
use parkposet::poset::{build_pp_poset, nc_poset};
use parkposet::shelling::{
    recursive_atom_counterexample, verify_key_lemma_with, verify_shelling_with,
    verify_support_lemmas_with, ShellingContext,
};
use parkposet::topology::{
    alternating_forests, alternating_forests_boundary, cluster_complex, order_complex,
    pp_character_table, CharacterRow,
};
use parkposet::verify::{self, Scale, CRITERIA};

#[derive(Parser)]
#[command(name = "parkpos", version, about = "Parking functions, noncrossing 2-partitions and their posets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Output format; each subcommand accepts a subset.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Worker threads for parallel sweeps.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Allow the slow sizes (n = 5 shelling, larger homology).
    #[arg(long, global = true)]
    long: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Stat {
    Chains,
    Whitney,
    Zeta,
    Mobius,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PosetKind {
    Pp,
    Nc,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KView {
    Summary,
    Nc,
    Pp,
    DivisibleNc,
    DivisiblePp,
}

#[derive(Subcommand)]
enum Command {
    /// Convert a parking function between representations.
    Convert {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// The object as JSON (or a digit string for words); `-` reads stdin.
        #[arg(long)]
        input: String,
    },
    /// Build a poset and export it.
    Poset {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "pp")]
        kind: PosetKind,
    },
    /// Chain, Whitney, zeta and Mobius tables.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Only this rank.
        #[arg(long)]
        l: Option<usize>,
        #[arg(long, value_enum, default_value = "chains")]
        stat: Stat,
        /// Closed form, brute force and series side by side.
        #[arg(long)]
        table: bool,
        /// Dump the truncated chain series as JSON.
        #[arg(long)]
        series: bool,
    },
    /// Verify the shelling and its lemmas.
    Shelling {
        #[arg(long)]
        n: usize,
    },
    /// Reduced homology of the proper part, or its character.
    Homology {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        character: bool,
    },
    /// The forest complex and the cluster complex.
    Cluster {
        #[arg(long)]
        n: usize,
        /// Report on the forest complex and its boundary instead.
        #[arg(long)]
        forests: bool,
    },
    /// k-divisible posets.
    Kdivisible {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, value_enum, default_value = "summary")]
        view: KView,
        /// Homology character and prime counts of the k-chain poset.
        #[arg(long)]
        character: bool,
    },
    /// Run the acceptance sweep, capped at `--n` when given.
    VerifyAll {
        #[arg(long)]
        n: Option<usize>,
    },
}

/// Argument or input problems; failed checks are reported through the
/// boolean next to the output instead.
enum Failure {
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(String, bool), Failure>;

struct Table {
    header: Vec<&'static str>,
    rows: Vec<Vec<Value>>,
}

impl Table {
    fn new(header: &[&'static str]) -> Self {
        Table {
            header: header.to_vec(),
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<Value>) {
        self.rows.push(row);
    }

    fn csv(&self) -> String {
        let mut s = self.header.join(",");
        s.push('\n');
        for r in &self.rows {
            let cells: Vec<String> = r
                .iter()
                .map(|v| match v {
                    Value::String(x) => x.clone(),
                    Value::Null => String::new(),
                    other => other.to_string(),
                })
                .collect();
            s.push_str(&cells.join(","));
            s.push('\n');
        }
        s
    }

    fn json(&self) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                let m: serde_json::Map<String, Value> = self
                    .header
                    .iter()
                    .map(|h| h.to_string())
                    .zip(r.iter().cloned())
                    .collect();
                Value::Object(m)
            })
            .collect();
        pretty(&Value::Array(rows))
    }

    fn render(&self, f: Option<Format>) -> Result<String, Failure> {
        match f.unwrap_or(Format::Csv) {
            Format::Csv => Ok(self.csv()),
            Format::Json => Ok(self.json()),
            Format::Dot => Err(Failure::Usage("tables have no DOT form".into())),
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn limit(what: &str, n: usize, max: usize, long_max: usize, long: bool) -> Result<(), Failure> {
    let m = if long { long_max } else { max };
    if n == 0 || n > m {
        let hint = if !long && long_max > max { " (use --long for more)" } else { "" };
        return Err(Failure::Usage(format!("{what}: n must be in 1..={m}{hint}")));
    }
    Ok(())
}

fn character_table_rows(rows: &[CharacterRow]) -> Table {
    let mut t = Table::new(&["cycle_type", "value", "formula", "sign_times_prime", "match"]);
    for r in rows {
        t.push(vec![
            json!(r.cycle_type),
            json!(r.value),
            json!(r.formula),
            json!(r.sign_times_prime),
            json!(r.matches),
        ]);
    }
    t
}

fn convert(from: &str, to: &str, input: &str, f: Option<Format>) -> Outcome {
    let from: Kind = from.parse()?;
    let to: Kind = to.parse()?;
    let text = if input == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
        s
    } else {
        input.to_string()
    };
    if matches!(f, Some(Format::Csv | Format::Dot)) {
        return Err(Failure::Usage("convert writes JSON only".into()));
    }
    let x = ParkingObject::parse(from, &text)?;
    let y = x.convert(to)?;
    Ok((pretty(&y.to_json()), true))
}

fn poset(n: usize, kind: PosetKind, c: &Common) -> Outcome {
    let (p, name) = match kind {
        PosetKind::Pp => {
            limit("poset", n, 5, 5, c.long)?;
            (build_pp_poset(n)?.poset().clone(), format!("PP{n}"))
        }
        PosetKind::Nc => {
            limit("poset", n, 8, 8, c.long)?;
            (nc_poset(n)?.1, format!("NC{n}"))
        }
    };
    let out = match c.format.unwrap_or(Format::Json) {
        Format::Json => pretty(&p.to_json()),
        Format::Dot => p.to_dot(&name),
        Format::Csv => {
            let mut t = Table::new(&["index", "label", "rank"]);
            for i in 0..p.len() {
                t.push(vec![json!(i), json!(p.label(i)), json!(p.rank(i))]);
            }
            t.csv()
        }
    };
    Ok((out, true))
}

fn count(n: usize, k: usize, l: Option<usize>, stat: Stat, table: bool, series: bool, c: &Common) -> Outcome {
    if n == 0 {
        return Err(Failure::Usage("n must be positive".into()));
    }
    if k == 0 || (k > 3 && (table || series)) {
        return Err(Failure::Usage("k must be in 1..=3 for series".into()));
    }
    let keep = |x: usize| l.is_none_or(|v| v == x);
    if series {
        let s = chain_series(k as i64, n, n)?;
        return Ok((pretty(&s.to_json()), true));
    }
    let oracle_ok = n <= 5;
    let pp = if oracle_ok { Some(build_pp_poset(n)?) } else { None };
    let mut ok = true;
    let t = match stat {
        Stat::Chains if table => {
            let s = if n <= 8 { Some(chain_series(k as i64, n, n)?) } else { None };
            let by = pp.as_ref().map(|p| p.poset().multichains_by_top_rank(k));
            let mut t = Table::new(&["n", "k", "l", "closed", "oracle", "series"]);
            for lv in (0..n).filter(|&x| keep(x)) {
                let row = ChainCountRow {
                    n,
                    k: k as i64,
                    l: lv,
                    closed: chain_count_closed(n, k as i64, lv)?,
                    oracle: by.as_ref().map(|b| b[lv] as i128),
                    series: s.as_ref().map(|s| series_chain_count(s, n, lv)).transpose()?,
                };
                ok &= row.oracle.is_none_or(|o| o == row.closed);
                ok &= row.series.is_none_or(|o| o == row.closed);
                t.push(vec![
                    json!(row.n),
                    json!(row.k),
                    json!(row.l),
                    json!(row.closed.to_string()),
                    row.oracle.map_or(Value::Null, |v| json!(v.to_string())),
                    row.series.map_or(Value::Null, |v| json!(v.to_string())),
                ]);
            }
            t
        }
        Stat::Chains => {
            let mut t = Table::new(&["l", "count"]);
            for lv in (0..n).filter(|&x| keep(x)) {
                let v = match &pp {
                    Some(p) => p.poset().multichains_by_top_rank(k)[lv] as i128,
                    None => chain_count_closed(n, k as i64, lv)?,
                };
                t.push(vec![json!(lv), json!(v.to_string())]);
            }
            t
        }
        Stat::Whitney => {
            let p = pp.ok_or_else(|| Failure::Usage("whitney needs n <= 5".into()))?;
            let mut t = Table::new(&["l", "second", "first", "first_closed"]);
            for lv in (0..n).filter(|&x| keep(x)) {
                let first = p.poset().whitney_first(lv)?;
                let closed = whitney_first_closed(n, lv)?;
                ok &= first as i128 == closed;
                t.push(vec![
                    json!(lv),
                    json!(p.poset().whitney_second(lv)),
                    json!(first),
                    json!(closed.to_string()),
                ]);
            }
            t
        }
        Stat::Zeta => {
            let mut t = Table::new(&["k", "count", "closed"]);
            for kv in 1..=k {
                let closed = zeta_closed(n, kv);
                let v = pp.as_ref().map(|p| p.poset().zeta_count(kv));
                ok &= v.is_none_or(|v| v as i128 == closed);
                t.push(vec![
                    json!(kv),
                    v.map_or(Value::Null, |v| json!(v.to_string())),
                    json!(closed.to_string()),
                ]);
            }
            t
        }
        Stat::Mobius => {
            let p = pp.ok_or_else(|| Failure::Usage("mobius needs n <= 5".into()))?;
            let hat = p.hat()?;
            let mu = hat.mobius(0, hat.len() - 1);
            let sign = if n.is_multiple_of(2) { 1 } else { -1 };
            let closed = sign * (n as i64 - 1).pow(n as u32 - 1);
            ok &= mu == closed;
            let mut t = Table::new(&["n", "mobius", "closed"]);
            t.push(vec![json!(n), json!(mu), json!(closed)]);
            t
        }
    };
    Ok((t.render(c.format)?, ok))
}

fn shelling(n: usize, c: &Common) -> Outcome {
    limit("shelling", n, 4, 5, c.long)?;
    let ctx = ShellingContext::build(n)?;
    let mut entries = Vec::new();
    let r = verify_shelling_with(&ctx);
    entries.push(json!({
        "lemma": "shelling",
        "domain": r.chains,
        "passed": r.pairs_checked - r.failures.len() as u64,
        "holds": r.holds,
        "first_counterexample": r.failures.first().map(|(a, b)| format!("chains {a} and {b}")),
    }));
    let k = verify_key_lemma_with(&ctx);
    entries.push(json!({
        "lemma": "key lemma",
        "domain": k.configurations,
        "passed": k.configurations - k.failures,
        "holds": k.holds(),
        "first_counterexample": k.first_failure,
    }));
    for l in verify_support_lemmas_with(&ctx) {
        entries.push(json!({
            "lemma": l.name,
            "domain": l.checked,
            "passed": l.checked - l.failures,
            "holds": l.holds(),
            "first_counterexample": l.first_failure,
        }));
    }
    let ce = recursive_atom_counterexample()?;
    let failed: Vec<&String> = ce.checks.iter().filter(|c| !c.1).map(|c| &c.0).collect();
    entries.push(json!({
        "lemma": "recursive atom counterexample",
        "domain": ce.checks.len(),
        "passed": ce.checks.len() - failed.len(),
        "holds": ce.holds(),
        "first_counterexample": failed.first(),
    }));
    let ok = entries.iter().all(|e| e["holds"] == json!(true));
    let out = match c.format.unwrap_or(Format::Json) {
        Format::Json => pretty(&json!({ "n": n, "checks": entries })),
        Format::Csv => {
            let mut t = Table::new(&["lemma", "domain", "passed", "holds", "first_counterexample"]);
            for e in &entries {
                t.push(vec![
                    e["lemma"].clone(),
                    e["domain"].clone(),
                    e["passed"].clone(),
                    e["holds"].clone(),
                    e["first_counterexample"].clone(),
                ]);
            }
            t.csv()
        }
        Format::Dot => return Err(Failure::Usage("shelling has no DOT form".into())),
    };
    Ok((out, ok))
}

fn homology(n: usize, character: bool, c: &Common) -> Outcome {
    limit("homology", n, 4, 5, c.long)?;
    let pp = build_pp_poset(n)?;
    if character {
        let rows = pp_character_table(&pp)?;
        let ok = rows.iter().all(|r| r.matches);
        return Ok((character_table_rows(&rows).render(c.format)?, ok));
    }
    let ranks = order_complex(pp.poset())?.homology_ranks();
    let mut t = Table::new(&["degree", "rank"]);
    for (i, r) in ranks.iter().enumerate() {
        t.push(vec![json!(i as i64 - 1), json!(r)]);
    }
    let ok = ranks
        .iter()
        .enumerate()
        .all(|(i, &r)| r == if i + 1 == n { (n - 1).pow(n as u32 - 1) } else { 0 });
    Ok((t.render(c.format)?, ok))
}

fn cluster(n: usize, forests: bool, c: &Common) -> Outcome {
    if forests {
        limit("forests", n, 7, 7, c.long)?;
        let (_, _, cx) = alternating_forests(n)?;
        let faces = cx.chain_complex().dims().to_vec();
        let boundary = if n >= 3 {
            alternating_forests_boundary(n)?.chain_complex().homology_ranks()
        } else {
            Vec::new()
        };
        let mut t = Table::new(&["degree", "faces", "boundary_rank"]);
        for (i, f) in faces.iter().enumerate() {
            t.push(vec![
                json!(i as i64 - 1),
                json!(f),
                boundary.get(i).map_or(Value::Null, |r| json!(r)),
            ]);
        }
        let ok = n < 3 || boundary.iter().enumerate().all(|(i, &r)| r == usize::from(i == n - 2));
        return Ok((t.render(c.format)?, ok));
    }
    limit("cluster", n, 4, 4, c.long)?;
    let r = cluster_complex(n)?.report();
    let pp = build_pp_poset(n)?;
    let mut ok = r.boolean_ideals && r.supports_injective;
    if c.format == Some(Format::Json) {
        return Ok((pretty(&serde_json::to_value(&r).expect("serializable")), ok));
    }
    let mut t = Table::new(&["l", "cluster_whitney", "signed_first_kind", "match"]);
    for (l, &w) in r.whitney.iter().enumerate() {
        let sign = if l % 2 == 0 { 1 } else { -1 };
        let v = sign * pp.poset().whitney_first(l)?;
        ok &= w as i64 == v;
        t.push(vec![json!(l), json!(w), json!(v), json!(w as i64 == v)]);
    }
    Ok((t.render(c.format)?, ok))
}

fn kdivisible(n: usize, k: usize, view: KView, character: bool, c: &Common) -> Outcome {
    if k == 0 || k > 3 {
        return Err(Failure::Usage("k must be in 1..=3".into()));
    }
    limit("kdivisible", n, 4, 4, c.long)?;
    if character {
        if n > 3 && !c.long {
            return Err(Failure::Usage("character needs n <= 3 (use --long for more)".into()));
        }
        let pk = build_pp_k(n, k)?;
        let rows = pk.character_table()?;
        let primes = k_prime_filter(&pk)?;
        let mut ok = rows.iter().all(|r| r.matches) && primes.holds();
        let mut t = Table::new(&[
            "cycle_type",
            "value",
            "formula",
            "sign_times_prime",
            "fixed_prime_words",
            "match",
        ]);
        for (r, p) in rows.iter().zip(&primes.rows) {
            let m = r.matches && p.matches;
            ok &= m;
            t.push(vec![
                json!(r.cycle_type),
                json!(r.value),
                json!(r.formula),
                json!(r.sign_times_prime),
                json!(p.fixed_prime_words),
                json!(m),
            ]);
        }
        return Ok((t.render(c.format)?, ok));
    }
    let export = |p: &parkposet::poset::FinitePoset, name: &str| -> Result<String, Failure> {
        Ok(match c.format.unwrap_or(Format::Json) {
            Format::Json => pretty(&p.to_json()),
            Format::Dot => p.to_dot(name),
            Format::Csv => {
                let mut t = Table::new(&["index", "label", "rank"]);
                for i in 0..p.len() {
                    t.push(vec![json!(i), json!(p.label(i)), json!(p.rank(i))]);
                }
                t.csv()
            }
        })
    };
    let out = match view {
        KView::Nc => export(&build_nc_k(n, k)?.1, &format!("NC{n}_{k}"))?,
        KView::Pp => export(&build_pp_k(n, k)?.poset, &format!("PP{n}_{k}"))?,
        KView::DivisibleNc => export(&edelman_divisible(n, k, Ambient::Nc)?.1, &format!("NC{}_div{k}", n * k))?,
        KView::DivisiblePp => export(&edelman_divisible(n, k, Ambient::Pp)?.1, &format!("PP{}_div{k}", n * k))?,
        KView::Summary => {
            let nck = build_nc_k(n, k)?.1.rank_counts();
            let ppk = build_pp_k(n, k)?.poset.rank_counts();
            let div = if n * k <= 8 {
                Some(edelman_divisible(n, k, Ambient::Nc)?.1.rank_counts())
            } else {
                None
            };
            let mut ok = div.as_ref().is_none_or(|d| *d == nck);
            ok &= ppk.iter().sum::<usize>() == (n * k + 1).pow(n as u32 - 1);
            let mut t = Table::new(&["l", "nc_k", "pp_k", "divisible_nc"]);
            for l in 0..n {
                t.push(vec![
                    json!(l),
                    json!(nck.get(l).copied().unwrap_or(0)),
                    json!(ppk.get(l).copied().unwrap_or(0)),
                    div.as_ref().map_or(Value::Null, |d| json!(d.get(l).copied().unwrap_or(0))),
                ]);
            }
            return Ok((t.render(c.format)?, ok));
        }
    };
    Ok((out, true))
}

fn verify_all(n: Option<usize>, c: &Common) -> Outcome {
    let scale = Scale {
        cap: n,
        long: c.long,
    };
    let mut outcomes: Vec<_> = CRITERIA
        .par_iter()
        .map(|&(id, _)| verify::run(id, scale))
        .collect();
    outcomes.sort_by_key(|o| o.id);
    for o in &outcomes {
        eprintln!("criterion {:>2}: {:.2}s", o.id, o.seconds);
    }
    let ok = outcomes.iter().all(|o| o.passed);
    let out = match c.format {
        Some(Format::Json) => pretty(&serde_json::to_value(&outcomes).expect("serializable")),
        Some(Format::Dot) => return Err(Failure::Usage("verify-all has no DOT form".into())),
        _ => {
            let mut s: String = outcomes.iter().map(|o| o.line() + "\n").collect();
            let passed = outcomes.iter().filter(|o| o.passed).count();
            s.push_str(&format!("{passed}/{} criteria passed\n", outcomes.len()));
            s
        }
    };
    Ok((out, ok))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let c = &cli.common;
    if let Some(j) = c.jobs {
        if j == 0 {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()
            .expect("thread pool is configured once");
    }
    let res = match &cli.command {
        Command::Convert { from, to, input } => convert(from, to, input, c.format),
        Command::Poset { n, kind } => poset(*n, *kind, c),
        Command::Count {
            n,
            k,
            l,
            stat,
            table,
            series,
        } => count(*n, *k, *l, *stat, *table, *series, c),
        Command::Shelling { n } => shelling(*n, c),
        Command::Homology { n, character } => homology(*n, *character, c),
        Command::Cluster { n, forests } => cluster(*n, *forests, c),
        Command::Kdivisible {
            n,
            k,
            view,
            character,
        } => kdivisible(*n, *k, *view, *character, c),
        Command::VerifyAll { n } => verify_all(*n, c),
    };
    match res {
        Ok((text, ok)) => {
            let written = match &c.output {
                Some(p) => std::fs::write(p, &text),
                None => {
                    print!("{text}");
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: writing output: {e}");
                return ExitCode::from(2);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: a check failed");
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
