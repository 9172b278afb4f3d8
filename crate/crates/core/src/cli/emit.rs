use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::arith::{self, format_rational, parse_rational};
use crate::chartab::{ag_kernel, character_table, CharacterTable, VirtualCharacter};
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::grp::{abelian_invariants, FiniteGroup};
use crate::localtame::{
    admissible_pairs, det_resolvend_at, disc_valuation, factorise_hom, phi_map, TameQuotient,
};
use crate::stick::{class_fingerprint, pairing_matrix, stick_pair, theta_map};

use super::{resolve_element, Format, RunConfig};

/// A rational prints as `p/q`; anything else as `cyclo(N; ...)`.
pub fn format_value(c: &Cyclotomic) -> String {
    match c.to_rational() {
        Some(r) => format_rational(&r),
        None => c.to_string(),
    }
}

pub fn parse_value(s: &str) -> Result<Cyclotomic> {
    let s = s.trim();
    if s.starts_with("cyclo(") {
        s.parse()
    } else {
        Ok(Cyclotomic::from_rational(parse_rational(s)?, 1))
    }
}

fn rats(v: &[BigRational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn json_text(v: &serde_json::Value) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn csv_text(header: &[String], rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(std::io::Error::other(e));
    w.write_record(header).map_err(io)?;
    for r in rows {
        w.write_record(r).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Left-aligned columns separated by two spaces.
fn pretty_grid(header: &[String], rows: &[Vec<String>]) -> String {
    let cols = header.len();
    let mut width = vec![0; cols];
    for r in std::iter::once(header).chain(rows.iter().map(Vec::as_slice)) {
        for (i, cell) in r.iter().enumerate() {
            width[i] = width[i].max(cell.chars().count());
        }
    }
    let line = |r: &[String]| {
        let cells: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{c:<w$}", w = width[i]))
            .collect();
        cells.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header);
    for r in rows {
        out += &line(r);
    }
    out
}

fn class_labels(g: &FiniteGroup) -> Vec<String> {
    (0..g.num_classes()).map(|c| g.label(g.class_rep(c)).to_string()).collect()
}

/// Serialized character table, also accepted by `verify --table`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TableJson {
    pub schema: u32,
    pub group: String,
    pub order: usize,
    pub class_reps: Vec<String>,
    pub class_sizes: Vec<usize>,
    pub degrees: Vec<u64>,
    pub rows: Vec<Vec<String>>,
}

impl TableJson {
    pub fn from_table(t: &CharacterTable) -> Self {
        let g = t.group();
        TableJson {
            schema: 1,
            group: g.name().to_string(),
            order: g.order(),
            class_reps: class_labels(g),
            class_sizes: (0..g.num_classes()).map(|c| g.class_size(c)).collect(),
            degrees: t.degrees().to_vec(),
            rows: t.rows().iter().map(|r| r.iter().map(format_value).collect()).collect(),
        }
    }

    /// Class values, unchecked beyond parsing.
    pub fn values(&self) -> Result<Vec<Vec<Cyclotomic>>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|s| parse_value(s)).collect())
            .collect()
    }
}

pub(super) fn table(g: &Arc<FiniteGroup>, format: Format) -> Result<String> {
    let t = character_table(g)?;
    let tj = TableJson::from_table(&t);
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(&tj)? + "\n"),
        Format::Csv | Format::Pretty => {
            let mut header = vec!["chi".to_string(), "degree".to_string()];
            header.extend(tj.class_reps.iter().cloned());
            let rows: Vec<Vec<String>> = tj
                .rows
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    let mut v = vec![format!("chi_{i}"), tj.degrees[i].to_string()];
                    v.extend(r.iter().cloned());
                    v
                })
                .collect();
            if format == Format::Csv {
                csv_text(&header, &rows)
            } else {
                let sizes: Vec<String> = tj.class_sizes.iter().map(|s| format!("|{s}|")).collect();
                let mut size_row = vec![String::new(), String::new()];
                size_row.extend(sizes);
                let mut all = vec![size_row];
                all.extend(rows);
                Ok(format!("{} (order {})\n", g.name(), g.order()) + &pretty_grid(&header, &all))
            }
        }
    }
}

fn sigma_json(g: &FiniteGroup, qs: &[u64], strict: bool) -> Result<Vec<serde_json::Value>> {
    qs.iter()
        .map(|&q| {
            let set = g.sigma_set(q, strict)?;
            let mut classes: Vec<usize> = set.iter().map(|&x| g.class_of(x)).collect();
            classes.sort_unstable();
            classes.dedup();
            Ok(json!({
                "q": q,
                "size": set.len(),
                "classes": classes.iter().map(|&c| g.label(g.class_rep(c))).collect::<Vec<_>>(),
                "elements": set.iter().map(|&x| g.label(x)).collect::<Vec<_>>(),
            }))
        })
        .collect()
}

fn theta_terms(g: &FiniteGroup, chi: &VirtualCharacter) -> Vec<(String, usize, String)> {
    let th = theta_map(chi);
    let by_class = th.class_coefficients().expect("Theta is central");
    by_class
        .iter()
        .enumerate()
        .filter(|(_, x)| !num_traits::Zero::is_zero(*x))
        .map(|(c, x)| (g.label(g.class_rep(c)).to_string(), g.class_size(c), format_rational(x)))
        .collect()
}

fn ag_json(t: &Arc<CharacterTable>) -> serde_json::Value {
    let ag = ag_kernel(t);
    let g = t.group();
    let ab = g.derived_and_abelianization();
    json!({
        "basis": ag.basis().iter().map(|r| r.iter().map(BigInt::to_string).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "index": ag.index().to_string(),
        "quotient_invariants": ag.quotient_invariants().iter().map(BigInt::to_string).collect::<Vec<_>>(),
        "abelianization_order": ab.quotient.order(),
        "abelianization_invariants": abelian_invariants(&ab.quotient),
    })
}

pub(super) fn pairing(g: &Arc<FiniteGroup>, cfg: &RunConfig) -> Result<String> {
    let t = character_table(g)?;
    let p = pairing_matrix(&t);
    let labels = class_labels(g);
    match cfg.format {
        Format::Csv => {
            let mut header = vec!["class".to_string()];
            header.extend((0..t.num_irreducibles()).map(|i| format!("chi_{i}")));
            let rows: Vec<Vec<String>> = p
                .iter()
                .enumerate()
                .map(|(c, r)| std::iter::once(labels[c].clone()).chain(rats(r)).collect())
                .collect();
            csv_text(&header, &rows)
        }
        Format::Json => {
            let theta: Vec<_> = (0..t.num_irreducibles())
                .map(|i| {
                    let chi = VirtualCharacter::irreducible(&t, i);
                    let terms: Vec<_> = theta_terms(g, &chi)
                        .into_iter()
                        .map(|(rep, size, x)| json!({"class": rep, "size": size, "coeff": x}))
                        .collect();
                    json!({"chi": i, "integral": theta_map(&chi).is_integral(), "terms": terms})
                })
                .collect();
            json_text(&json!({
                "schema": 1,
                "command": "pairing",
                "group": g.name(),
                "classes": labels,
                "degrees": t.degrees(),
                "pairing": p.iter().map(|r| rats(r)).collect::<Vec<_>>(),
                "theta": theta,
                "ag": ag_json(&t),
                "sigma": sigma_json(g, &cfg.qs, cfg.strict)?,
            }))
        }
        Format::Pretty => {
            let mut header = vec!["class".to_string()];
            header.extend((0..t.num_irreducibles()).map(|i| format!("chi_{i}")));
            let rows: Vec<Vec<String>> = p
                .iter()
                .enumerate()
                .map(|(c, r)| std::iter::once(labels[c].clone()).chain(rats(r)).collect())
                .collect();
            let mut out = format!("pairing <chi, g> for {}\n", g.name());
            out += &pretty_grid(&header, &rows);
            out += "\nTheta(chi_i) by class\n";
            for i in 0..t.num_irreducibles() {
                let chi = VirtualCharacter::irreducible(&t, i);
                let terms: Vec<String> = theta_terms(g, &chi)
                    .into_iter()
                    .map(|(rep, _, x)| format!("{x}*[{rep}]"))
                    .collect();
                let body = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
                out += &format!("  chi_{i}: {body}\n");
            }
            let ag = ag_kernel(&t);
            out += &format!("\nA_G index {}\n", ag.index());
            for r in ag.basis() {
                out += &format!("  [{}]\n", r.iter().map(BigInt::to_string).collect::<Vec<_>>().join(", "));
            }
            out += "\n";
            for &q in &cfg.qs {
                let set = g.sigma_set(q, cfg.strict)?;
                let names: Vec<&str> = set.iter().map(|&x| g.label(x)).collect();
                out += &format!("Sigma_{q}: {{{}}}\n", names.join(", "));
            }
            Ok(out)
        }
    }
}

fn chi_list(t: &Arc<CharacterTable>, cfg: &RunConfig) -> Result<Vec<(String, VirtualCharacter)>> {
    match &cfg.chi {
        Some(coords) => {
            let chi = VirtualCharacter::from_coords(t, coords.clone())?;
            Ok(vec![(format!("[{}]", rats(coords).join(", ")), chi)])
        }
        None => Ok((0..t.num_irreducibles())
            .map(|i| (format!("chi_{i}"), VirtualCharacter::irreducible(t, i)))
            .collect()),
    }
}

pub(super) fn theta(g: &Arc<FiniteGroup>, cfg: &RunConfig) -> Result<String> {
    let t = character_table(g)?;
    let ag = ag_kernel(&t);
    let chis = chi_list(&t, cfg)?;
    let entries: Vec<_> = chis
        .iter()
        .map(|(name, chi)| {
            let th = theta_map(chi);
            let in_ag = chi.integer_coords().map(|c| ag.contains(&c));
            (name, rats(chi.coords()), th.is_integral(), in_ag, theta_terms(g, chi))
        })
        .collect();
    match cfg.format {
        Format::Json => json_text(&json!({
            "schema": 1,
            "command": "theta",
            "group": g.name(),
            "theta": entries.iter().map(|(name, coords, integral, in_ag, terms)| json!({
                "chi": name,
                "coords": coords,
                "integral": integral,
                "in_ag": in_ag,
                "terms": terms.iter().map(|(rep, size, x)| json!({"class": rep, "size": size, "coeff": x})).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let header: Vec<String> = ["chi", "class", "size", "coeff"].iter().map(|s| s.to_string()).collect();
            let rows: Vec<Vec<String>> = entries
                .iter()
                .flat_map(|(name, _, _, _, terms)| {
                    terms.iter().map(move |(rep, size, x)| {
                        vec![name.to_string(), rep.clone(), size.to_string(), x.clone()]
                    })
                })
                .collect();
            csv_text(&header, &rows)
        }
        Format::Pretty => {
            let mut out = String::new();
            for (name, _, integral, in_ag, terms) in &entries {
                let body: Vec<String> = terms.iter().map(|(rep, _, x)| format!("{x}*[{rep}]")).collect();
                let body = if body.is_empty() { "0".to_string() } else { body.join(" + ") };
                let ag_note = match in_ag {
                    Some(true) => "in A_G",
                    Some(false) => "not in A_G",
                    None => "rational coordinates",
                };
                out += &format!(
                    "Theta({name}) = {body}   ({}, {ag_note})\n",
                    if *integral { "integral" } else { "not integral" }
                );
            }
            Ok(out)
        }
    }
}

pub(super) fn ag(g: &Arc<FiniteGroup>, format: Format) -> Result<String> {
    let t = character_table(g)?;
    let v = ag_json(&t);
    match format {
        Format::Json => {
            let mut v = v;
            v["schema"] = json!(1);
            v["command"] = json!("ag");
            v["group"] = json!(g.name());
            json_text(&v)
        }
        Format::Csv => {
            let ag = ag_kernel(&t);
            let header: Vec<String> = (0..t.num_irreducibles()).map(|i| format!("chi_{i}")).collect();
            let rows: Vec<Vec<String>> = ag
                .basis()
                .iter()
                .map(|r| r.iter().map(BigInt::to_string).collect())
                .collect();
            csv_text(&header, &rows)
        }
        Format::Pretty => {
            let ag = ag_kernel(&t);
            let mut out = format!(
                "A_G for {}: index {}, Z^{}/A_G invariants {:?}, |G^ab| = {}\n",
                g.name(),
                ag.index(),
                t.num_irreducibles(),
                ag.quotient_invariants_u64(),
                v["abelianization_order"]
            );
            for r in ag.basis() {
                out += &format!("  [{}]\n", r.iter().map(BigInt::to_string).collect::<Vec<_>>().join(", "));
            }
            Ok(out)
        }
    }
}

pub(super) fn sigma(g: &Arc<FiniteGroup>, cfg: &RunConfig) -> Result<String> {
    let sets = sigma_json(g, &cfg.qs, cfg.strict)?;
    match cfg.format {
        Format::Json => json_text(&json!({"schema": 1, "command": "sigma", "group": g.name(), "sigma": sets})),
        Format::Csv => {
            let header: Vec<String> = ["q", "element", "class"].iter().map(|s| s.to_string()).collect();
            let mut rows = Vec::new();
            for &q in &cfg.qs {
                for x in g.sigma_set(q, cfg.strict)? {
                    rows.push(vec![q.to_string(), g.label(x).to_string(), g.label(g.class_rep(g.class_of(x))).to_string()]);
                }
            }
            csv_text(&header, &rows)
        }
        Format::Pretty => {
            let mut out = String::new();
            for &q in &cfg.qs {
                let set = g.sigma_set(q, cfg.strict)?;
                let names: Vec<&str> = set.iter().map(|&x| g.label(x)).collect();
                out += &format!("Sigma_{q}({}) = {{{}}} ({} elements)\n", g.name(), names.join(", "), set.len());
            }
            Ok(out)
        }
    }
}

pub(super) fn fingerprint(g: &Arc<FiniteGroup>, format: Format) -> Result<String> {
    let t = character_table(g)?;
    let labels = class_labels(g);
    let fps: Vec<Vec<String>> = (0..g.num_classes())
        .map(|c| rats(&class_fingerprint(&t, g.class_rep(c))))
        .collect();
    let mut distinct = fps.clone();
    distinct.sort();
    distinct.dedup();
    let injective = distinct.len() == fps.len();
    match format {
        Format::Json => json_text(&json!({
            "schema": 1,
            "command": "fingerprint",
            "group": g.name(),
            "injective": injective,
            "classes": fps.iter().enumerate().map(|(c, f)| json!({"class": labels[c], "fingerprint": f})).collect::<Vec<_>>(),
        })),
        Format::Csv | Format::Pretty => {
            let mut header = vec!["class".to_string()];
            header.extend((0..t.num_irreducibles()).map(|i| format!("chi_{i}")));
            let rows: Vec<Vec<String>> = fps
                .iter()
                .enumerate()
                .map(|(c, f)| std::iter::once(labels[c].clone()).chain(f.iter().cloned()).collect())
                .collect();
            if format == Format::Csv {
                csv_text(&header, &rows)
            } else {
                Ok(pretty_grid(&header, &rows)
                    + &format!("fingerprint is {}injective on classes\n", if injective { "" } else { "NOT " }))
            }
        }
    }
}

pub(super) fn det_resolvend(g: &Arc<FiniteGroup>, cfg: &RunConfig) -> Result<String> {
    let t = character_table(g)?;
    let chis = chi_list(&t, cfg)?;
    let mut entries = Vec::new();
    for &q in &cfg.qs {
        let elements: Vec<usize> = match &cfg.s {
            Some(s) => vec![resolve_element(g, s)?],
            None => {
                let set = g.sigma_set(q, cfg.strict)?;
                let mut reps: Vec<usize> = set.iter().map(|&x| g.class_rep(g.class_of(x))).collect();
                reps.sort_unstable();
                reps.dedup();
                reps
            }
        };
        for s in elements {
            let r = phi_map(g, q, s, cfg.strict)?.resolvend();
            for (name, chi) in &chis {
                let det = det_resolvend_at(&r, s, chi)?;
                let pair = stick_pair(chi, s);
                let matches = det.uniformizer_exponent() == Some(&pair);
                entries.push((q, g.label(s).to_string(), name.clone(), det.to_string(), format_rational(&pair), matches));
            }
        }
    }
    match cfg.format {
        Format::Json => json_text(&json!({
            "schema": 1,
            "command": "det-resolvend",
            "group": g.name(),
            "values": entries.iter().map(|(q, s, chi, det, pair, ok)| json!({
                "q": q, "s": s, "chi": chi, "det": det, "pairing": pair, "matches": ok,
            })).collect::<Vec<_>>(),
        })),
        Format::Csv | Format::Pretty => {
            let header: Vec<String> = ["q", "s", "chi", "det", "pairing", "matches"].iter().map(|s| s.to_string()).collect();
            let rows: Vec<Vec<String>> = entries
                .iter()
                .map(|(q, s, chi, det, pair, ok)| vec![q.to_string(), s.clone(), chi.clone(), det.clone(), pair.clone(), ok.to_string()])
                .collect();
            if cfg.format == Format::Csv {
                csv_text(&header, &rows)
            } else {
                Ok(pretty_grid(&header, &rows))
            }
        }
    }
}

pub(super) fn factorise(g: &Arc<FiniteGroup>, cfg: &RunConfig) -> Result<String> {
    let mut reports = Vec::new();
    for &q in &cfg.qs {
        match (&cfg.s, &cfg.t) {
            (Some(s), Some(t)) => {
                let s = resolve_element(g, s)?;
                let t = resolve_element(g, t)?;
                let m = g.element_order(s);
                let n = arith::multiplicative_order(q, m)?;
                let quot = TameQuotient::new(q, m, n)?;
                reports.push(factorise_hom(&quot, g, s, t)?);
            }
            (None, None) => {
                for (quot, s, t) in admissible_pairs(g, q) {
                    reports.push(factorise_hom(&quot, g, s, t)?);
                }
            }
            _ => return Err(Error::InvalidParameter("give both --s and --t, or neither".into())),
        }
    }
    match cfg.format {
        Format::Json => {
            if reports.len() == 1 {
                let mut v = serde_json::to_value(&reports[0])?;
                v["schema"] = json!(1);
                json_text(&v)
            } else {
                json_text(&json!({"schema": 1, "command": "factorise", "group": g.name(), "reports": reports}))
            }
        }
        Format::Csv | Format::Pretty => {
            let header: Vec<String> = ["q", "M", "N", "s", "t", "check", "pass", "failing_pair"].iter().map(|s| s.to_string()).collect();
            let rows: Vec<Vec<String>> = reports
                .iter()
                .flat_map(|r| {
                    r.checks.iter().map(move |c| {
                        vec![
                            r.q.to_string(),
                            r.m.to_string(),
                            r.n.to_string(),
                            r.s.clone(),
                            r.t.clone(),
                            c.name.to_string(),
                            c.pass.to_string(),
                            c.failing_pair.as_ref().map(|p| p.join(" ; ")).unwrap_or_default(),
                        ]
                    })
                })
                .collect();
            if cfg.format == Format::Csv {
                csv_text(&header, &rows)
            } else {
                Ok(pretty_grid(&header, &rows))
            }
        }
    }
}

pub(super) fn disc(g: &Arc<FiniteGroup>, format: Format) -> Result<String> {
    let rows: Vec<Vec<String>> = (0..g.num_classes())
        .map(|c| {
            let s = g.class_rep(c);
            vec![
                g.label(s).to_string(),
                g.element_order(s).to_string(),
                format_rational(&disc_valuation(g, s)),
            ]
        })
        .collect();
    let header: Vec<String> = ["class", "order", "valuation"].iter().map(|s| s.to_string()).collect();
    match format {
        Format::Json => json_text(&json!({
            "schema": 1,
            "command": "disc",
            "group": g.name(),
            "order": g.order(),
            "classes": rows.iter().map(|r| json!({"class": r[0], "order": r[1].parse::<u64>().unwrap(), "valuation": r[2]})).collect::<Vec<_>>(),
        })),
        Format::Csv => csv_text(&header, &rows),
        Format::Pretty => Ok(pretty_grid(&header, &rows)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::builtin;

    #[test]
    fn value_round_trip() {
        for c in [Cyclotomic::from_int(-2, 6), Cyclotomic::zeta(3, 1), Cyclotomic::from_rational(arith::rat(3, 4), 4)] {
            assert_eq!(parse_value(&format_value(&c)).unwrap(), c);
        }
    }

    #[test]
    fn s3_csv_table() {
        let g = Arc::new(builtin("S3").unwrap());
        let text = table(&g, Format::Csv).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 4);
        assert_eq!(lines[1], "chi_0,1,1,1,1");
        assert_eq!(lines[3].split(',').nth(1), Some("2"));
    }
}
