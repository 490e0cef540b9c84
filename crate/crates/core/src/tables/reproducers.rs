use std::collections::HashMap;

use super::{Cell, Generated, ReproduceOptions, TableDoc, TableError, TableReproducer};
use crate::clifford::{minimal_admissible_module, Signature};
use crate::htype::build_htype;
use crate::prolong::{identify_complex_type, killing_report, prolong_with_progress, ProlongationResult};
use crate::rhe::{build_cn_table, exceptional_screen, search_an};
use crate::rootsys::{
    enumerate_two_gradings, grading_dims_by_roots, grading_dims_closed_form, sigma_label, Family,
    GradingSpec, SimpleType,
};

const TABLE3: &str = include_str!("../../data/table3.json");
const TABLE3A: &str = include_str!("../../data/table3a.json");
const TABLE4A: &str = include_str!("../../data/table4a.json");
const TABLE5: &str = include_str!("../../data/table5.json");
const TABLE8: &str = include_str!("../../data/table8.json");
const TABLE9: &str = include_str!("../../data/table9.json");

fn compute_err(e: impl std::fmt::Display) -> TableError {
    TableError::Compute(e.to_string())
}

/// Keys made of the first two cells.
fn pair_keys(doc: &TableDoc) -> Vec<String> {
    doc.rows
        .iter()
        .map(|r| format!("{} {}", r[0].text, r[1].text))
        .collect()
}

/// Name of the complex simple algebra of a type.
pub fn complex_name(ty: SimpleType) -> String {
    let n = ty.rank;
    match ty.family {
        Family::A => format!("sl({},C)", n + 1),
        Family::B => format!("so({},C)", 2 * n + 1),
        Family::C => format!("sp({},C)", 2 * n),
        Family::D => format!("so({},C)", 2 * n),
        _ => ty.to_string(),
    }
}

/// First `len` level dimensions of `copies` copies of the contact algebra
/// on a 3-dimensional base: `#{a + b + 2c = p + 2}` per copy.
pub fn contact_growth(copies: usize, len: usize) -> Vec<usize> {
    (0..len)
        .map(|p| {
            let total = p;
            (0..=total / 2).map(|c| total - 2 * c + 1).sum::<usize>() * copies
        })
        .collect()
}

/// Display form of a growth vector: truncated ones end in `,...`.
pub fn growth_label(res: &ProlongationResult) -> String {
    let parts: Vec<String> = res.growth_vector.iter().map(|d| d.to_string()).collect();
    if res.terminated {
        format!("({})", parts.join(","))
    } else {
        let shown = &parts[..parts.len().min(5)];
        format!("({},...)", shown.join(","))
    }
}

fn type_label(res: &ProlongationResult) -> String {
    if res.terminated {
        if !killing_report(&res.algebra).nondegenerate {
            return String::new();
        }
        return identify_complex_type(res)
            .unique()
            .map(|(ty, _)| complex_name(ty))
            .unwrap_or_default();
    }
    let k = res.growth_vector[0];
    if k > 0 && res.growth_vector == contact_growth(k, res.growth_vector.len()) {
        vec!["ct(3,C)"; k].join("+")
    } else {
        String::new()
    }
}

/// Dimensions by formula for every Σ in the classical ranges.
pub struct ClassicalDimTable;

fn classical_sigmas(ty: SimpleType) -> Vec<Vec<usize>> {
    let n = ty.rank;
    match ty.family {
        Family::A => (1..=n / 2)
            .flat_map(|i| (i + 1..=n + 1 - i).map(move |j| vec![i, j]))
            .collect(),
        Family::B => (2..=n).map(|i| vec![i]).collect(),
        Family::C => (1..n).map(|i| vec![i]).collect(),
        Family::D => {
            let mut v: Vec<Vec<usize>> = (2..=n - 2).map(|i| vec![i]).collect();
            v.push(vec![1, n]);
            v.push(vec![n - 1, n]);
            v
        }
        _ => Vec::new(),
    }
}

fn classical_types(rank_max: usize) -> Vec<SimpleType> {
    SimpleType::all_up_to_rank(rank_max)
        .into_iter()
        .filter(|t| t.family.is_classical() && !(t.family == Family::A && t.rank < 2))
        .collect()
}

const DIM_HEADERS: [&str; 4] = ["Algebra", "Σ", "dim g-1", "dim g-2"];

impl TableReproducer for ClassicalDimTable {
    fn id(&self) -> &'static str {
        "2"
    }

    fn expected(&self, opts: &ReproduceOptions) -> Result<TableDoc, TableError> {
        let mut doc = TableDoc::new(
            "2",
            "Dimensions of g-1 and g-2 for |2|-gradings of the classical algebras",
            &DIM_HEADERS,
        );
        for ty in classical_types(opts.rank_max) {
            for sigma in classical_sigmas(ty) {
                let spec = GradingSpec::of(ty, &sigma).map_err(compute_err)?;
                let d = grading_dims_closed_form(&spec).map_err(compute_err)?;
                doc.push_plain([
                    ty.to_string(),
                    sigma_label(&sigma),
                    d.d1.to_string(),
                    d.d2.to_string(),
                ]);
            }
        }
        doc.notes.push("Values from the closed formulas.".into());
        Ok(doc)
    }

    fn generate(&self, opts: &ReproduceOptions) -> Result<Generated, TableError> {
        let mut doc = TableDoc::new(
            "2",
            "Dimensions of g-1 and g-2 for |2|-gradings of the classical algebras",
            &DIM_HEADERS,
        );
        for ty in classical_types(opts.rank_max) {
            for g in enumerate_two_gradings(ty) {
                let d = grading_dims_by_roots(&g);
                doc.push_plain([
                    ty.to_string(),
                    g.sigma_label(),
                    d.d1.to_string(),
                    d.d2.to_string(),
                ]);
            }
        }
        doc.notes.push("Values from counting roots.".into());
        Ok(doc.into())
    }

    fn keys(&self, doc: &TableDoc) -> Vec<String> {
        pair_keys(doc)
    }
}

/// The unique contact grading of each classical family, fitted over ranks.
pub struct ContactTable;

/// `a·n + b` as `2n-2`.
fn linear_label(a: i64, b: i64) -> String {
    let head = match a {
        0 => String::new(),
        1 => "n".to_string(),
        _ => format!("{a}n"),
    };
    match (head.is_empty(), b) {
        (true, _) => b.to_string(),
        (false, 0) => head,
        (false, b) if b > 0 => format!("{head}+{b}"),
        (false, b) => format!("{head}{b}"),
    }
}

fn index_label(values: &[(usize, usize)]) -> Option<String> {
    let (_, first) = values[0];
    if values.iter().all(|&(_, v)| v == first) {
        return Some(first.to_string());
    }
    let (n0, v0) = values[0];
    let off = n0 as i64 - v0 as i64;
    if values.iter().all(|&(n, v)| n as i64 - v as i64 == off) {
        return Some(match off {
            0 => "n".to_string(),
            k if k > 0 => format!("n-{k}"),
            k => format!("n+{}", -k),
        });
    }
    None
}

impl TableReproducer for ContactTable {
    fn id(&self) -> &'static str {
        "3"
    }

    fn expected(&self, _opts: &ReproduceOptions) -> Result<TableDoc, TableError> {
        TableDoc::from_json_str("3", TABLE3)
    }

    fn generate(&self, opts: &ReproduceOptions) -> Result<Generated, TableError> {
        let mut doc = TableDoc::new(
            "3",
            "Contact cases in complex simple Lie algebras",
            &["Type", "dim g-1", "Choice of root"],
        );
        for fam in [Family::A, Family::B, Family::C, Family::D] {
            let lo = fam.min_rank().max(2);
            let mut found = Vec::new();
            for n in lo..=opts.rank_max.max(lo + 1) {
                let ty = SimpleType::new(fam, n).map_err(compute_err)?;
                let contact: Vec<GradingSpec> = enumerate_two_gradings(ty)
                    .into_iter()
                    .filter(|g| grading_dims_by_roots(g).d2 == 1)
                    .collect();
                if contact.len() != 1 {
                    return Err(TableError::Compute(format!(
                        "{ty} has {} contact gradings",
                        contact.len()
                    )));
                }
                let g = &contact[0];
                found.push((n, g.sigma.clone(), grading_dims_by_roots(g).d1));
            }
            let (n0, _, d0) = &found[0];
            let (n1, _, d1) = &found[1];
            let a = (*d1 as i64 - *d0 as i64) / (*n1 as i64 - *n0 as i64);
            let b = *d0 as i64 - a * *n0 as i64;
            if found.iter().any(|(n, _, d)| a * *n as i64 + b != *d as i64) {
                return Err(TableError::Compute(format!("dim g-1 of {fam}_n is not linear")));
            }
            let width = found[0].1.len();
            if found.iter().any(|(_, s, _)| s.len() != width) {
                return Err(TableError::Compute(format!("Σ size varies for {fam}_n")));
            }
            let labels: Option<Vec<String>> = (0..width)
                .map(|k| {
                    let vals: Vec<(usize, usize)> = found.iter().map(|(n, s, _)| (*n, s[k])).collect();
                    index_label(&vals).map(|l| format!("α{l}"))
                })
                .collect();
            let labels =
                labels.ok_or_else(|| TableError::Compute(format!("Σ of {fam}_n has no pattern")))?;
            doc.push_plain([
                format!("{fam}_n"),
                linear_label(a, b),
                format!("{{{}}}", labels.join(",")),
            ]);
        }
        Ok(doc.into())
    }
}

/// `A_n` families with centre dimension 2 to 8 and their congruences.
pub struct AnTable;

impl TableReproducer for AnTable {
    fn id(&self) -> &'static str {
        "3a"
    }

    fn expected(&self, _opts: &ReproduceOptions) -> Result<TableDoc, TableError> {
        TableDoc::from_json_str("3a", TABLE3A)
    }

    fn generate(&self, opts: &ReproduceOptions) -> Result<Generated, TableError> {
        let mut doc = TableDoc::new(
            "3a",
            "A_n gradings matching pseudo H-type dimensions, d2 = 2..8",
            &["d2", "(i,j)", "d1", "Restrictions"],
        );
        for d2 in 2..=8 {
            for f in search_an(d2, opts.n_max).map_err(compute_err)? {
                let mut restr = format!("n>{}", f.lower);
                match f.modulus {
                    1 => {}
                    2 if f.residue == 1 => restr.push_str(", n odd"),
                    2 => restr.push_str(", n even"),
                    m => restr.push_str(&format!(", n≡{} mod {m}", f.residue)),
                }
                doc.push_plain([
                    d2.to_string(),
                    format!("({},n-{})", f.i, f.j_offset),
                    format!("{}(n-{})", f.c, f.c - 1),
                    restr,
                ]);
            }
        }
        Ok(doc.into())
    }

    /// `d2` with an occurrence counter, since a centre size can repeat.
    fn keys(&self, doc: &TableDoc) -> Vec<String> {
        let mut seen: HashMap<String, usize> = HashMap::new();
        doc.rows
            .iter()
            .map(|r| {
                let c = seen.entry(r[0].text.clone()).or_default();
                *c += 1;
                format!("{}#{}", r[0].text, c)
            })
            .collect()
    }
}

/// Ranks of `C_n` gradings by `d1` and Σ index.
pub struct CnTableReproducer;

const CN_I_MAX: usize = 10;
const CN_D1_MAX: usize = 64;
const CN_EXTRA_ROW: usize = 640;
/// Rows between 40 and 64 that the published table skips.
const CN_SHOWN_UP_TO: usize = 40;

impl TableReproducer for CnTableReproducer {
    fn id(&self) -> &'static str {
        "4a"
    }

    fn expected(&self, _opts: &ReproduceOptions) -> Result<TableDoc, TableError> {
        TableDoc::from_json_str("4a", TABLE4A)
    }

    fn generate(&self, _opts: &ReproduceOptions) -> Result<Generated, TableError> {
        let t = build_cn_table(CN_I_MAX, CN_D1_MAX, &[CN_EXTRA_ROW]);
        let headers: Vec<String> = std::iter::once("d1".to_string())
            .chain(t.columns.iter().map(|&i| format!("i={i} (d2={})", i * (i + 1) / 2)))
            .collect();
        let header_refs: Vec<&str> = headers.iter().map(String::as_str).collect();
        let mut doc = TableDoc::new(
            "4a",
            "Ranks n of sp(2n,C) gradings with d1 = 2i(n-i), d2 = i(i+1)/2; bold where the RHE bound holds",
            &header_refs,
        );
        for (d1, cells) in t.rows.iter().zip(&t.cells) {
            let mut row = vec![Cell::plain(d1.to_string())];
            row.extend(cells.iter().map(|c| match c {
                Some(c) => Cell::bold(c.n.to_string(), c.bold),
                None => Cell::plain("--"),
            }));
            doc.push(row);
        }
        Ok(doc.into())
    }

    fn elided(&self, key: &str) -> bool {
        key.parse::<usize>()
            .is_ok_and(|d1| d1 > CN_SHOWN_UP_TO && d1 < CN_D1_MAX)
    }
}

/// The screen of the exceptional algebras.
pub struct ExceptionalTable;

impl TableReproducer for ExceptionalTable {
    fn id(&self) -> &'static str {
        "5"
    }

    fn expected(&self, _opts: &ReproduceOptions) -> Result<TableDoc, TableError> {
        TableDoc::from_json_str("5", TABLE5)
    }

    fn generate(&self, _opts: &ReproduceOptions) -> Result<Generated, TableError> {
        let mut doc = TableDoc::new(
            "5",
            "Choice of Σ and dimensions for |2|-gradings of the exceptional Lie algebras",
            &DIM_HEADERS,
        );
        for v in exceptional_screen() {
            // Contact gradings pass trivially and are not highlighted.
            let bold = v.candidate && v.dims.d2 > 1;
            doc.push(vec![
                Cell::plain(v.ty.to_string()),
                Cell::plain(sigma_label(&v.sigma)),
                Cell::bold(v.dims.d1.to_string(), bold),
                Cell::bold(v.dims.d2.to_string(), bold),
            ]);
        }
        Ok(doc.into())
    }

    fn keys(&self, doc: &TableDoc) -> Vec<String> {
        pair_keys(doc)
    }
}

/// Prolongations of `n^{r,s}` built from minimal admissible modules.
pub struct GrowthTable {
    id: &'static str,
    data: &'static str,
    /// Signatures in row order; the flag marks runs gated behind `long`.
    cases: Vec<(Signature, bool)>,
}

impl GrowthTable {
    pub fn table8() -> Self {
        GrowthTable {
            id: "8",
            data: TABLE8,
            cases: (1..=4)
                .flat_map(Signature::with_total)
                .map(|s| (s, false))
                .collect(),
        }
    }

    pub fn table9() -> Self {
        let mut cases: Vec<(Signature, bool)> = (5..=6)
            .flat_map(Signature::with_total)
            .map(|s| (s, false))
            .collect();
        for (r, s) in [(7, 0), (3, 4), (8, 0), (7, 1), (4, 4), (3, 5)] {
            cases.push((Signature { r, s }, true));
        }
        GrowthTable {
            id: "9",
            data: TABLE9,
            cases,
        }
    }

    pub fn signatures(&self) -> Vec<(Signature, bool)> {
        self.cases.clone()
    }
}

fn row_key(sig: Signature) -> String {
    format!("n^{{{},{}}}", sig.r, sig.s)
}

/// Builds `n^{r,s}` and prolongs it.
pub fn prolong_signature(
    sig: Signature,
    max_degree: i32,
    progress: &mut dyn FnMut(i32, usize),
) -> Result<ProlongationResult, TableError> {
    let rep = minimal_admissible_module(sig).map_err(compute_err)?;
    let (alg, _) = build_htype(&rep).map_err(compute_err)?;
    prolong_with_progress(&alg, max_degree, progress).map_err(compute_err)
}

impl TableReproducer for GrowthTable {
    fn id(&self) -> &'static str {
        self.id
    }

    fn expected(&self, _opts: &ReproduceOptions) -> Result<TableDoc, TableError> {
        TableDoc::from_json_str(self.id, self.data)
    }

    fn generate(&self, opts: &ReproduceOptions) -> Result<Generated, TableError> {
        let expected = self.expected(opts)?;
        let headers: Vec<&str> = expected.headers.iter().map(String::as_str).collect();
        let mut doc = TableDoc::new(self.id, &expected.title, &headers);
        let mut skipped = Vec::new();
        let runs: Vec<Signature> = self
            .cases
            .iter()
            .filter(|(sig, long)| {
                if *long && !opts.long {
                    skipped.push(row_key(*sig));
                    false
                } else {
                    true
                }
            })
            .map(|(sig, _)| *sig)
            .collect();
        // Independent cases run on their own threads; rows keep case order.
        let results: Vec<Result<ProlongationResult, TableError>> = std::thread::scope(|scope| {
            let handles: Vec<_> = runs
                .iter()
                .map(|&sig| {
                    scope.spawn(move || {
                        let mut report = |p: i32, d: usize| {
                            opts.report(&format!("n^{{{},{}}}: dim g_{p} = {d}", sig.r, sig.s))
                        };
                        prolong_signature(sig, opts.max_degree, &mut report)
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("prolongation thread panicked"))
                .collect()
        });
        for (sig, res) in runs.iter().zip(results) {
            let res = res?;
            doc.push_plain([
                sig.total().to_string(),
                row_key(*sig),
                growth_label(&res),
                type_label(&res),
            ]);
        }
        if !skipped.is_empty() {
            doc.notes
                .push(format!("Not computed without --long: {}", skipped.join(", ")));
        }
        Ok(Generated { doc, skipped })
    }

    fn keys(&self, doc: &TableDoc) -> Vec<String> {
        doc.rows.iter().map(|r| r[1].text.clone()).collect()
    }
}
