//! Text, JSON and LaTeX output for every report the command line prints.
//!
//! All output is assembled in a fixed order, so identical invocations give
//! byte-identical results.

use std::fmt::Write;

use cycgroups_core::classify::known_groups_for;
use cycgroups_core::exclusion::missing_divisor;
use cycgroups_core::{integer_partitions, CandidateRow, CensusReport, RuleId, Signature, Verdict};
use serde::Serialize;
use serde_json::json;

use crate::catalog::CatalogEntry;
use crate::error::Result;
use crate::verify::{Exploration, VerificationReport};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
    Latex,
}

fn to_json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

/// `C3 x C3` and `C3xC3` both become `$C_{3}\times C_{3}$`. Digits are
/// subscripted only right after a family letter, so `SL(2,3)` is unchanged.
pub fn latex_label(label: &str) -> String {
    let mut out = String::from("$");
    let mut chars = label.chars().filter(|c| !c.is_whitespace()).peekable();
    let mut prev = ' ';
    while let Some(c) = chars.next() {
        match c {
            'x' => out.push_str("\\times "),
            ':' => out.push_str("\\rtimes "),
            c if c.is_ascii_digit() && prev.is_ascii_uppercase() => {
                let mut digits = String::from(c);
                while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    digits.push(d);
                    chars.next();
                }
                let _ = write!(out, "_{{{digits}}}");
            }
            c => out.push(c),
        }
        prev = c;
    }
    out.push('$');
    out
}

fn join_labels(labels: &[String], latex: bool) -> String {
    if labels.is_empty() {
        return "-".into();
    }
    let parts: Vec<String> = labels
        .iter()
        .map(|l| if latex { latex_label(l) } else { l.clone() })
        .collect();
    parts.join(", ")
}

fn known_labels(sig: &Signature) -> Vec<String> {
    known_groups_for(sig)
        .map(|gs| gs.iter().map(|g| g.label()).collect())
        .unwrap_or_default()
}

/// How an exclusion is justified in the published tables' style: `No C_3`
/// for a missing divisor, `Sylow`, or the rule tag.
pub fn rule_display(rule: RuleId, sig: &Signature, latex: bool) -> String {
    match (rule, missing_divisor(sig)) {
        (RuleId::NoCn, Some(n)) if latex => format!("No $C_{{{n}}}$"),
        (RuleId::NoCn, Some(n)) => format!("No C{n}"),
        (RuleId::Sylow, _) => "Sylow".into(),
        (other, _) => other.tag().into(),
    }
}

fn factorization_text(row: &CandidateRow, latex: bool) -> String {
    let sep = if latex { "\\cdot " } else { "*" };
    let parts: Vec<String> = row
        .factorization
        .iter()
        .map(|(n, m)| format!("{n}{sep}{m}"))
        .collect();
    parts.join(" + ")
}

fn partition_text(p: &[usize]) -> String {
    let parts: Vec<String> = p.iter().map(ToString::to_string).collect();
    parts.join("+")
}

pub fn census_report(label: &str, report: &CensusReport, format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(report),
        Format::Table => {
            let n_d: Vec<String> = report.n_d.iter().map(|(d, n)| format!("{d}:{n}")).collect();
            Ok(format!(
                "group   {label}\norder   {}\ncyclic  {}\ndelta   {}\nsigma   {}\nn_d     {}\n",
                report.group_order,
                report.total_cyclic,
                report.delta,
                report.signature,
                n_d.join(" ")
            ))
        }
        Format::Latex => {
            let mut out = String::from("\\begin{tabular}{|c|c|c|c|}\n\\hline\n$|G|$ & $|C(G)|$ & $\\Delta(G)$ & $\\sigma(G)$ \\\\\n\\hline\n");
            let _ = writeln!(
                out,
                "{} & {} & {} & {} \\\\\n\\hline\n\\end{{tabular}}",
                report.group_order, report.total_cyclic, report.delta, report.signature
            );
            Ok(out)
        }
    }
}

fn candidates_latex(delta: usize, rows: &[CandidateRow], out: &mut String) -> Result<()> {
    let _ = writeln!(
        out,
        "\\begin{{table}}[ht]\n\t\\caption{{Table for $\\Delta(G)={delta}$}}\n\t\\centering"
    );
    out.push_str("\\begin{tabular}{|c|c|c|}\n\\hline\nPartition & & $\\sigma(G)$ \\\\\n\\hline\n");
    for partition in integer_partitions(delta)? {
        let group: Vec<&CandidateRow> = rows.iter().filter(|r| r.partition == partition).collect();
        if group.is_empty() {
            let _ = writeln!(out, "{} & & none \\\\\n\\hline", partition_text(&partition));
            continue;
        }
        let mut patterns: Vec<String> = Vec::new();
        for text in group.iter().map(|r| factorization_text(r, true)) {
            if !patterns.contains(&text) {
                patterns.push(text);
            }
        }
        for (k, pattern) in patterns.iter().enumerate() {
            let sigs: Vec<String> = group
                .iter()
                .filter(|r| factorization_text(r, true) == *pattern)
                .map(|r| r.signature.to_string())
                .collect();
            let first = if k == 0 {
                partition_text(&partition)
            } else {
                String::new()
            };
            let end = if k + 1 == patterns.len() {
                "\\hline"
            } else {
                "\\cline{2-3}"
            };
            let _ = writeln!(
                out,
                "{first} & ${pattern}$ & {} \\\\ {end}",
                sigs.join(", ")
            );
        }
    }
    out.push_str("\\end{tabular}\n\\end{table}\n");
    Ok(())
}

pub fn candidates(delta: usize, rows: &[CandidateRow], format: Format) -> Result<String> {
    let mut out = String::new();
    match format {
        Format::Json => {
            return to_json(&json!({ "delta": delta, "count": rows.len(), "candidates": rows }))
        }
        Format::Latex => candidates_latex(delta, rows, &mut out)?,
        Format::Table => {
            let _ = writeln!(out, "candidates for delta {delta}: {}", rows.len());
            let _ = writeln!(out, "{:<10} {:<16} sigma", "partition", "factorization");
            for r in rows {
                let _ = writeln!(
                    out,
                    "{:<10} {:<16} {}",
                    partition_text(&r.partition),
                    factorization_text(r, false),
                    r.signature
                );
            }
        }
    }
    Ok(out)
}

#[derive(Serialize)]
struct RevisedRow<'a> {
    signature: &'a Signature,
    groups: Vec<String>,
}

/// The candidate list, the exclusion table and the revised table.
pub fn exclusion(delta: usize, rows: &[(CandidateRow, Verdict)], format: Format) -> Result<String> {
    let candidates_only: Vec<CandidateRow> = rows.iter().map(|(r, _)| r.clone()).collect();
    let excluded: Vec<&Verdict> = rows.iter().map(|(_, v)| v).filter(|v| v.excluded).collect();
    let revised: Vec<RevisedRow> = rows
        .iter()
        .filter(|(_, v)| !v.excluded)
        .map(|(r, _)| RevisedRow {
            signature: &r.signature,
            groups: known_labels(&r.signature),
        })
        .collect();
    let mut out = String::new();
    match format {
        Format::Json => {
            return to_json(&json!({
                "delta": delta,
                "candidates": candidates_only,
                "exclusions": excluded,
                "revised": revised,
            }))
        }
        Format::Table => {
            let _ = writeln!(
                out,
                "delta {delta}: {} candidates, {} excluded, {} survivors\n",
                rows.len(),
                excluded.len(),
                revised.len()
            );
            out.push_str(&candidates(delta, &candidates_only, Format::Table)?);
            let _ = writeln!(
                out,
                "\nexclusion table for delta {delta}: {}",
                excluded.len()
            );
            let _ = writeln!(out, "{:<20} {:<16} fired", "sigma", "cited");
            for v in &excluded {
                let cited = v
                    .cited_rule
                    .map(|r| rule_display(r, &v.signature, false))
                    .unwrap_or_else(|| "-".into());
                let fired: Vec<&str> = v.fired_rules.iter().map(|r| r.tag()).collect();
                let _ = writeln!(
                    out,
                    "{:<20} {:<16} {}",
                    v.signature.to_string(),
                    cited,
                    fired.join(",")
                );
            }
            let _ = writeln!(out, "\nrevised table for delta {delta}: {}", revised.len());
            let _ = writeln!(out, "{:<20} groups", "sigma");
            for r in &revised {
                let _ = writeln!(
                    out,
                    "{:<20} {}",
                    r.signature.to_string(),
                    join_labels(&r.groups, false)
                );
            }
        }
        Format::Latex => {
            candidates_latex(delta, &candidates_only, &mut out)?;
            let _ = writeln!(
                out,
                "\n\\begin{{table}}[ht]\n\t\\caption{{Exclusion table for $\\Delta(G)={delta}$}}\n\t\\centering"
            );
            out.push_str("\\begin{tabular}{|c|l|}\n\t\\hline\n\t$\\sigma(G)$ & Excluded by \\\\\n\t\\hline\n");
            for v in &excluded {
                let rule = v
                    .cited_rule
                    .or_else(|| v.fired_rules.first().copied())
                    .expect("excluded means some rule fired");
                let _ = writeln!(
                    out,
                    "\t{} & {} \\\\",
                    v.signature,
                    rule_display(rule, &v.signature, true)
                );
            }
            out.push_str("\t\\hline\n\\end{tabular}\n\\end{table}\n");
            let _ = writeln!(
                out,
                "\n\\begin{{table}}[ht]\n\t\\caption{{Revised table for $\\Delta(G)={delta}$}}\n\t\\centering"
            );
            out.push_str("\\begin{tabular}{|c|c|c|}\n\\hline\nPartition & $\\sigma(G)$ & Groups \\\\\n\\hline\n");
            let mut last_partition = None;
            for (r, _) in rows.iter().filter(|(_, v)| !v.excluded) {
                let shown = if last_partition == Some(&r.partition) {
                    String::new()
                } else {
                    partition_text(&r.partition)
                };
                last_partition = Some(&r.partition);
                let _ = writeln!(
                    out,
                    "{shown} & {} & {} \\\\\n\\hline",
                    r.signature,
                    join_labels(&known_labels(&r.signature), true)
                );
            }
            out.push_str("\\end{tabular}\n\\end{table}\n");
        }
    }
    Ok(out)
}

pub fn verification(report: &VerificationReport, format: Format) -> Result<String> {
    if format == Format::Json {
        return to_json(report);
    }
    let mark = |pass: bool| if pass { "PASS" } else { "FAIL" };
    let mut out = String::new();
    for c in &report.claims {
        let sigma = c
            .computed_sigma
            .as_ref()
            .map(ToString::to_string)
            .unwrap_or_else(|| "-".into());
        let delta = c
            .computed_delta
            .map(|d| d.to_string())
            .unwrap_or_else(|| "-".into());
        let _ = write!(
            out,
            "{} claim delta={} {:<18} delta={delta} sigma={sigma}",
            mark(c.pass),
            c.delta,
            c.group
        );
        if let Some(detail) = &c.detail {
            let _ = write!(out, " ({detail})");
        }
        out.push('\n');
    }
    for s in &report.sweep {
        let matched = s.matched.as_deref().unwrap_or("no match");
        let _ = writeln!(
            out,
            "{} sweep ({},{}) {:<14} delta={} sigma={} -> {matched}",
            mark(s.pass),
            s.order,
            s.index,
            s.label,
            s.delta,
            s.sigma
        );
    }
    for p in &report.properties {
        let _ = writeln!(
            out,
            "{} {} [{} cases] {}",
            mark(p.pass),
            p.name,
            p.checked,
            p.detail
        );
    }
    let _ = writeln!(out, "overall: {}", mark(report.pass));
    Ok(out)
}

#[derive(Serialize)]
struct SearchRow<'a> {
    #[serde(flatten)]
    entry: &'a CatalogEntry,
    census: &'a CensusReport,
}

pub fn search(rows: &[(&CatalogEntry, &CensusReport)], format: Format) -> Result<String> {
    let mut out = String::new();
    match format {
        Format::Json => {
            let rows: Vec<SearchRow> = rows
                .iter()
                .map(|&(entry, census)| SearchRow { entry, census })
                .collect();
            return to_json(&rows);
        }
        Format::Table => {
            let _ = writeln!(
                out,
                "{:<8} {:<16} {:<6} {:<6} sigma",
                "id", "label", "order", "delta"
            );
            for (e, c) in rows {
                let _ = writeln!(
                    out,
                    "{:<8} {:<16} {:<6} {:<6} {}",
                    e.id(),
                    e.label,
                    e.order,
                    c.delta,
                    c.signature
                );
            }
        }
        Format::Latex => {
            out.push_str("\\begin{tabular}{|c|c|c|c|}\n\\hline\nSmall group & $G$ & $\\Delta(G)$ & $\\sigma(G)$ \\\\\n\\hline\n");
            for (e, c) in rows {
                let _ = writeln!(
                    out,
                    "{} & {} & {} & {} \\\\",
                    e.id(),
                    latex_label(&e.label),
                    c.delta,
                    c.signature
                );
            }
            out.push_str("\\hline\n\\end{tabular}\n");
        }
    }
    Ok(out)
}

pub fn exploration(expl: &Exploration, format: Format) -> Result<String> {
    let mut out = String::new();
    match format {
        Format::Json => return to_json(expl),
        Format::Table => {
            let _ = writeln!(
                out,
                "delta {}: {} candidates, {} excluded, {} survivors",
                expl.delta,
                expl.candidates,
                expl.excluded,
                expl.survivors.len()
            );
            for s in &expl.survivors {
                let _ = write!(out, "{:<24} {}", s.signature.to_string(), s.status);
                if !s.known.is_empty() {
                    let _ = write!(out, "  known: {}", s.known.join(", "));
                }
                for w in &s.witnesses {
                    let _ = write!(
                        out,
                        "  witness ({},{}) {} delta={}",
                        w.order, w.index, w.label, w.delta
                    );
                }
                out.push('\n');
            }
            for w in &expl.contradictions {
                let _ = writeln!(
                    out,
                    "contradiction: ({},{}) {} has delta={} and sigma {}, which was excluded",
                    w.order, w.index, w.label, w.delta, w.sigma
                );
            }
            let _ = writeln!(
                out,
                "catalog consistent: {}",
                if expl.consistent { "yes" } else { "no" }
            );
        }
        Format::Latex => {
            let _ = writeln!(
                out,
                "\\begin{{table}}[ht]\n\t\\caption{{Revised table for $\\Delta(G)={}$}}\n\t\\centering",
                expl.delta
            );
            out.push_str("\\begin{tabular}{|c|c|c|}\n\\hline\n$\\sigma(G)$ & Status & Witnesses \\\\\n\\hline\n");
            for s in &expl.survivors {
                let labels: Vec<String> = s.witnesses.iter().map(|w| w.label.clone()).collect();
                let _ = writeln!(
                    out,
                    "{} & {} & {} \\\\",
                    s.signature,
                    s.status,
                    join_labels(&labels, true)
                );
            }
            out.push_str("\\hline\n\\end{tabular}\n\\end{table}\n");
        }
    }
    Ok(out)
}
