//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on usage or input errors, 2 when `verify`
//! finds a row whose assertions do not hold.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::catalog::{make, scan_catalog_with_dir, CatalogEntry};
use crate::covering::{agrees, sigma_classifier, Sigma};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::io::{load_group_file, load_groups_dir};
use crate::profile::GroupProfile;
use crate::report::{cache_key, rows_to_csv, ReportRow, RowCache};
use crate::union_max::{
    check_star_all_designations, conjecture_probe_profile, mu_k, star_bound, star_bound_designated, union_ratio,
    verify_c2, verify_c3, verify_c3_odd, Verification,
};
use crate::{fraction, Rational};

#[derive(Debug, Parser)]
#[command(
    name = "groupcover",
    version,
    about = "Covering numbers and maximal subgroup unions of small finite groups"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Directory of group JSON files merged into the catalog.
    #[arg(long, global = true)]
    groups_dir: Option<PathBuf>,
    /// Line-delimited JSON cache consulted by scans.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    C2,
    C3,
    C3odd,
    Star,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Covering number of one group, exact and classified.
    Sigma { group: String },
    /// Largest union of k proper subgroups of one group.
    Mu {
        group: String,
        #[arg(long)]
        k: usize,
    },
    /// Check a bound on every catalog group up to --max-order.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long)]
        max_order: usize,
        /// Largest subset size for the star suite.
        #[arg(long, default_value_t = 5)]
        k: usize,
    },
    /// μ_k over the catalog and the largest ratio among groups with σ > k.
    Scan {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        max_order: usize,
    },
    /// Conjecture probe rows for every catalog group.
    Conjecture {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        max_order: usize,
    },
    /// Random sampling of the star inequality over catalog groups.
    ProbeStar {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Largest subset size.
        #[arg(long, default_value_t = 5)]
        k: usize,
        #[arg(long, default_value_t = 24)]
        max_order: usize,
    },
}

/// Runs the CLI on `argv` (including the program name) and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    let result = match cli.jobs {
        Some(jobs) => match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            Ok(pool) => pool.install(|| execute(&cli)),
            Err(err) => {
                eprintln!("error: --jobs: {err}");
                return 1;
            }
        },
        None => execute(&cli),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            1
        }
    }
}

fn execute(cli: &Cli) -> Result<i32> {
    match &cli.command {
        Command::Sigma { group } => {
            let profile = resolve_profile(group, cli.groups_dir.as_deref())?;
            emit(cli, &sigma_document(&profile), &[sigma_row(&profile)])?;
            Ok(0)
        }
        Command::Mu { group, k } => {
            let k = positive("--k", *k)?;
            let profile = resolve_profile(group, cli.groups_dir.as_deref())?;
            let row = mu_row(&profile, k);
            emit(cli, &serde_json::to_value(&row).expect("row serializes"), &[row])?;
            Ok(0)
        }
        Command::Verify { suite, max_order, k } => {
            let entries = catalog(cli, *max_order)?;
            let rows = verify_rows(&entries, *suite, *k)?;
            let violations = rows.iter().filter(|r| r.holds == Some(false)).count();
            let doc = json!({
                "suite": suite_name(*suite),
                "max_order": max_order,
                "groups": rows.len(),
                "violations": violations,
                "holds": violations == 0,
                "rows": rows,
            });
            emit(cli, &doc, &rows)?;
            Ok(if violations == 0 { 0 } else { 2 })
        }
        Command::Scan { k, max_order } => {
            let k = positive("--k", *k)?;
            let entries = catalog(cli, *max_order)?;
            let rows = cached_rows(cli, &entries, &format!("scan:k={k}"), |p| scan_row(p, k))?;
            let best = rows
                .iter()
                .filter(|r| r.flags.get("sigma_exceeds_k") == Some(&Value::Bool(true)))
                .filter_map(|r| Some((r.ratio.as_ref()?.parse::<Rational>().ok()?, r)))
                .fold(None::<(Rational, &ReportRow)>, |acc, (q, r)| match acc {
                    Some((best, _)) if best >= q => acc,
                    _ => Some((q, r)),
                });
            let doc = json!({
                "k": k,
                "max_order": max_order,
                "max_ratio": best.map(|(q, _)| fraction(&q)),
                "max_group": best.map(|(_, r)| r.group.clone()),
                "max_witness": best.map(|(_, r)| r.witness.clone()),
                "rows": rows,
            });
            emit(cli, &doc, &rows)?;
            Ok(0)
        }
        Command::Conjecture { k, max_order } => {
            if *k < 2 {
                return Err(usage("--k must be at least 2 for the conjecture probe"));
            }
            let entries = catalog(cli, *max_order)?;
            let rows = cached_rows(cli, &entries, &format!("conjecture:k={k}"), |p| conjecture_row(p, *k))?;
            let doc = json!({ "k": k, "max_order": max_order, "rows": rows });
            emit(cli, &doc, &rows)?;
            Ok(0)
        }
        Command::ProbeStar {
            samples,
            seed,
            k,
            max_order,
        } => {
            let k = positive("--k", *k)?;
            let entries = catalog(cli, *max_order)?;
            let (doc, rows) = probe_star(&entries, *samples, *seed, k)?;
            emit(cli, &doc, &rows)?;
            Ok(0)
        }
    }
}

fn usage(message: &str) -> Error {
    Error::UnknownSpec(message.to_string())
}

fn positive(flag: &str, value: usize) -> Result<usize> {
    if value == 0 {
        return Err(usage(&format!("{flag} must be positive")));
    }
    Ok(value)
}

fn suite_name(suite: SuiteArg) -> &'static str {
    match suite {
        SuiteArg::C2 => "c2",
        SuiteArg::C3 => "c3",
        SuiteArg::C3odd => "c3odd",
        SuiteArg::Star => "star",
    }
}

/// A group spec, a path to a group file, or the name of a group in `--groups-dir`.
fn resolve_group(spec: &str, groups_dir: Option<&Path>) -> Result<Group> {
    let path = Path::new(spec);
    if path.is_file() {
        return load_group_file(path);
    }
    match make(spec) {
        Err(Error::UnknownSpec(_)) if groups_dir.is_some() => {
            let dir = groups_dir.expect("checked");
            load_groups_dir(dir)?
                .into_iter()
                .map(|(_, g)| g)
                .find(|g| g.name() == spec)
                .ok_or_else(|| Error::UnknownSpec(spec.to_string()))
        }
        other => other,
    }
}

fn resolve_profile(spec: &str, groups_dir: Option<&Path>) -> Result<GroupProfile> {
    let group = resolve_group(spec, groups_dir)?;
    let name = group.name().to_string();
    GroupProfile::build(name, group)
}

fn catalog(cli: &Cli, max_order: usize) -> Result<Vec<CatalogEntry>> {
    let mut entries = scan_catalog_with_dir(max_order, cli.groups_dir.as_deref())?;
    entries.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(entries)
}

fn emit(cli: &Cli, document: &Value, rows: &[ReportRow]) -> Result<()> {
    let text = match cli.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(document).expect("document serializes");
            s.push('\n');
            s
        }
        Format::Csv => rows_to_csv(rows),
    };
    match &cli.out {
        Some(path) => fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

#[derive(Serialize)]
struct SigmaDocument {
    group: String,
    order: usize,
    sigma: Sigma,
    certificate: Vec<Vec<usize>>,
    classifier: String,
    classifier_reason: String,
    agreement: bool,
}

fn sigma_document(p: &GroupProfile) -> Value {
    let (classifier, reason, agreement) = match sigma_classifier(&p.group, &p.lattice) {
        Ok(class) => (
            serde_json::to_value(class.value)
                .expect("enum serializes")
                .as_str()
                .unwrap_or_default()
                .to_string(),
            class.reason.to_string(),
            agrees(p.cover.sigma, class.value),
        ),
        Err(err) => ("clause_mismatch".to_string(), err.to_string(), false),
    };
    let doc = SigmaDocument {
        group: p.name.clone(),
        order: p.group.order(),
        sigma: p.cover.sigma,
        certificate: p
            .cover
            .certificate
            .iter()
            .map(|&i| p.lattice.get(i).elements())
            .collect(),
        classifier,
        classifier_reason: reason,
        agreement,
    };
    serde_json::to_value(doc).expect("document serializes")
}

fn sigma_row(p: &GroupProfile) -> ReportRow {
    let doc = sigma_document(p);
    let mut row = ReportRow::new(p.name.clone(), p.group.order(), p.cover.sigma)
        .flag("classifier", &doc["classifier"])
        .flag("agreement", &doc["agreement"]);
    row.witness = p
        .cover
        .certificate
        .iter()
        .map(|&i| p.lattice.get(i).elements())
        .collect();
    row
}

fn mu_row(p: &GroupProfile, k: usize) -> ReportRow {
    let w = mu_k(&p.group, &p.lattice, k);
    let mut row = ReportRow::new(p.name.clone(), p.group.order(), p.cover.sigma)
        .flag("covers", w.covers())
        .flag(
            "subgroup_orders",
            w.subgroup_ids
                .iter()
                .map(|&i| p.lattice.get(i).order())
                .collect::<Vec<_>>(),
        );
    row.k = Some(k);
    row.mu = Some(w.union_size);
    row.ratio = Some(fraction(&w.ratio));
    if !w.ratios.is_empty() {
        row.bound = Some(fraction(&star_bound(&w.ratios).value));
    }
    row.witness = w.element_lists(&p.lattice);
    row
}

fn scan_row(p: &GroupProfile, k: usize) -> ReportRow {
    mu_row(p, k).flag("sigma_exceeds_k", p.cover.sigma.exceeds(k))
}

fn conjecture_row(p: &GroupProfile, k: usize) -> ReportRow {
    let rep = conjecture_probe_profile(p, k);
    let completer = rep.cover_completer.map(|m| p.lattice.get(m).elements());
    let mut row = ReportRow::new(p.name.clone(), p.group.order(), rep.sigma)
        .flag("sigma_is_k_plus_1", rep.sigma_is_k_plus_1)
        .flag("cover_completer", completer)
        .flag("conjecture_satisfied", rep.conjecture_satisfied);
    row.k = Some(k);
    row.mu = Some(rep.witness.union_size);
    row.ratio = Some(fraction(&rep.witness.ratio));
    row.witness = rep.witness.element_lists(&p.lattice);
    row
}

/// Rows for every entry of order > 1, consulting and filling `--cache` when given.
fn cached_rows(
    cli: &Cli,
    entries: &[CatalogEntry],
    tag: &str,
    compute: impl Fn(&GroupProfile) -> ReportRow + Sync,
) -> Result<Vec<ReportRow>> {
    let entries: Vec<&CatalogEntry> = entries.iter().filter(|e| e.group.order() > 1).collect();
    let mut cache = cli.cache.as_deref().map(RowCache::open).transpose()?;
    let cached: Vec<Option<ReportRow>> = entries
        .iter()
        .map(|e| cache.as_ref().and_then(|c| c.get(&cache_key(&e.name, tag)).cloned()))
        .collect();
    let computed: Vec<Option<ReportRow>> = entries
        .par_iter()
        .zip(&cached)
        .map(|(e, hit)| match hit {
            Some(_) => Ok(None),
            None => GroupProfile::from_entry(e).map(|p| Some(compute(&p))),
        })
        .collect::<Result<_>>()?;
    let mut rows = Vec::with_capacity(entries.len());
    for ((entry, hit), fresh) in entries.iter().zip(cached).zip(computed) {
        match (hit, fresh) {
            (Some(row), _) => rows.push(row),
            (None, Some(row)) => {
                if let Some(cache) = cache.as_mut() {
                    cache.put(&cache_key(&entry.name, tag), row.clone())?;
                }
                rows.push(row);
            }
            (None, None) => unreachable!("every miss is computed"),
        }
    }
    rows.sort_by(|a, b| a.group.cmp(&b.group));
    Ok(rows)
}

fn verify_rows(entries: &[CatalogEntry], suite: SuiteArg, max_subset: usize) -> Result<Vec<ReportRow>> {
    let mut rows: Vec<ReportRow> = entries
        .par_iter()
        .filter(|e| e.group.order() > 1)
        .map(|e| {
            let p = GroupProfile::from_entry(e)?;
            Ok(match suite {
                SuiteArg::C2 => verification_row(&p, verify_c2(&p.group, &p.lattice)),
                SuiteArg::C3 => verification_row(&p, verify_c3(&p.group, &p.lattice)),
                SuiteArg::C3odd => verification_row(&p, verify_c3_odd(&p.group, &p.lattice)),
                SuiteArg::Star => star_row(&p, max_subset),
            })
        })
        .collect::<Result<_>>()?;
    rows.sort_by(|a, b| a.group.cmp(&b.group));
    Ok(rows)
}

fn verification_row(p: &GroupProfile, v: Verification) -> ReportRow {
    let mut row = ReportRow::new(p.name.clone(), p.group.order(), v.sigma)
        .flag("applicable", v.applicable)
        .flag("bound_holds", v.bound_holds)
        .flags_from(&v.flags);
    row.k = Some(v.witness.k);
    row.mu = Some(v.witness.union_size);
    row.ratio = Some(fraction(&v.witness.ratio));
    row.bound = Some(fraction(&v.bound));
    row.holds = Some(v.holds());
    row.witness = v.witness.element_lists(&p.lattice);
    row
}

/// Exhaustive star check over all subsets of at most `max_subset` distinct proper subgroups.
fn star_row(p: &GroupProfile, max_subset: usize) -> ReportRow {
    let proper = p.lattice.proper_ids();
    let mut checked = 0usize;
    let mut failure: Option<Vec<usize>> = None;
    let mut tightest: Option<(Rational, Vec<usize>)> = None;
    let mut chosen = Vec::new();
    walk_subsets(&proper, max_subset.min(proper.len()), 0, &mut chosen, &mut |ids| {
        checked += 1;
        if !check_star_all_designations(&p.group, &p.lattice, ids) && failure.is_none() {
            failure = Some(ids.to_vec());
        }
        let slack = star_slack(p, ids);
        if tightest.as_ref().is_none_or(|(s, _)| slack < *s) {
            tightest = Some((slack, ids.to_vec()));
        }
    });
    let mut row = ReportRow::new(p.name.clone(), p.group.order(), p.cover.sigma)
        .flag("subsets_checked", checked)
        .flag("min_slack", tightest.as_ref().map(|(s, _)| fraction(s)));
    row.k = Some(max_subset);
    row.holds = Some(failure.is_none());
    let shown = failure.or(tightest.map(|(_, ids)| ids)).unwrap_or_default();
    row.witness = shown.iter().map(|&i| p.lattice.get(i).elements()).collect();
    row
}

fn walk_subsets(
    ids: &[usize],
    max_len: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    for i in start..ids.len() {
        chosen.push(ids[i]);
        visit(chosen);
        if chosen.len() < max_len {
            walk_subsets(ids, max_len, i + 1, chosen, visit);
        }
        chosen.pop();
    }
}

/// `min over designations of bound − union ratio`.
fn star_slack(p: &GroupProfile, ids: &[usize]) -> Rational {
    let mut ratios: Vec<Rational> = ids
        .iter()
        .map(|&i| crate::ratio(p.lattice.get(i).order(), p.group.order()))
        .collect();
    ratios.sort();
    let union = union_ratio(&p.group, &p.lattice, ids);
    (0..ratios.len())
        .map(|d| star_bound_designated(&ratios, d) - union)
        .min()
        .expect("nonempty subset")
}

fn probe_star(
    entries: &[CatalogEntry],
    samples: usize,
    seed: u64,
    max_subset: usize,
) -> Result<(Value, Vec<ReportRow>)> {
    let profiles: Vec<GroupProfile> = crate::profile::profile_all(entries)?
        .into_iter()
        .filter(|p| !p.lattice.proper_ids().is_empty())
        .collect();
    if profiles.is_empty() {
        return Err(usage(
            "probe-star needs at least one catalog group with a proper subgroup",
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = Vec::new();
    let mut tightest: Option<(Rational, ReportRow)> = None;
    for _ in 0..samples {
        let p = &profiles[rng.gen_range(0..profiles.len())];
        let proper = p.lattice.proper_ids();
        let size = rng.gen_range(1..=max_subset.min(proper.len()));
        let mut ids: Vec<usize> = proper.choose_multiple(&mut rng, size).copied().collect();
        ids.sort_unstable();
        let slack = star_slack(p, &ids);
        let holds = check_star_all_designations(&p.group, &p.lattice, &ids);
        let mut row = ReportRow::new(p.name.clone(), p.group.order(), p.cover.sigma).flag("slack", fraction(&slack));
        row.k = Some(size);
        row.ratio = Some(fraction(&union_ratio(&p.group, &p.lattice, &ids)));
        row.holds = Some(holds);
        row.witness = ids.iter().map(|&i| p.lattice.get(i).elements()).collect();
        if !holds {
            violations.push(row.clone());
        }
        if tightest.as_ref().is_none_or(|(s, _)| slack < *s) {
            tightest = Some((slack, row));
        }
    }
    let doc = json!({
        "samples": samples,
        "seed": seed,
        "k": max_subset,
        "violations": violations.len(),
        "min_slack": tightest.as_ref().map(|(s, _)| fraction(s)),
        "tightest": tightest.as_ref().map(|(_, r)| r),
        "rows": violations,
    });
    let mut rows = violations;
    if let Some((_, row)) = tightest {
        rows.push(row);
    }
    Ok((doc, rows))
}
