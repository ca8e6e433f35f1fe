use serde_json::{json, Map, Value};
use wavefront_core::poly::Poly;
use wavefront_core::ratfunc::RatFunc;

pub const SCHEMA_VERSION: u32 = 1;

pub enum Cell {
    Text(String),
    Int(i64),
    Flag(bool),
    Poly(RatFunc),
}

impl Cell {
    pub fn text(s: impl Into<String>) -> Cell {
        Cell::Text(s.into())
    }

    pub fn poly(p: &Poly) -> Cell {
        Cell::Poly(RatFunc::from_poly(p.clone()))
    }

    fn tsv(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Int(n) => n.to_string(),
            Cell::Flag(b) => if *b { "yes" } else { "no" }.to_string(),
            Cell::Poly(p) => p.to_string(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Text(s) => json!(s),
            Cell::Int(n) => json!(n),
            Cell::Flag(b) => json!(b),
            Cell::Poly(p) => poly_json(p),
        }
    }
}

fn terms_json(terms: &[(i64, wavefront_core::poly::Rational)]) -> Value {
    terms.iter().map(|(e, c)| json!([e, c.to_string()])).collect()
}

/// `{"text", "terms": [[exponent, "coefficient"], ...]}`, with a separate
/// numerator and denominator when the entry is not a Laurent polynomial.
fn poly_json(p: &RatFunc) -> Value {
    match p.laurent_terms() {
        Some(t) => json!({ "text": p.to_string(), "terms": terms_json(&t) }),
        None => {
            let sparse = |q: &Poly| -> Vec<(i64, _)> { q.sparse().into_iter().map(|(e, c)| (e as i64, c)).collect() };
            json!({
                "text": p.to_string(),
                "numerator": terms_json(&sparse(p.numer())),
                "denominator": terms_json(&sparse(p.denom())),
            })
        }
    }
}

pub struct Section {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Section {
    pub fn new(name: &str, columns: &[&str]) -> Section {
        Section { name: name.into(), columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    /// A square matrix with row and column labels.
    pub fn matrix(name: &str, labels: &[String], cols: &[String], entry: impl Fn(usize, usize) -> Cell) -> Section {
        let mut columns = vec!["row".to_string()];
        columns.extend(cols.iter().cloned());
        let rows = labels
            .iter()
            .enumerate()
            .map(|(i, l)| {
                let mut r = vec![Cell::text(l.clone())];
                r.extend((0..cols.len()).map(|j| entry(i, j)));
                r
            })
            .collect();
        Section { name: name.into(), columns, rows }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

pub struct Report {
    pub command: String,
    pub datum: String,
    pub sections: Vec<Section>,
}

impl Report {
    /// One `# name` line per section, then a header row and tab-separated rows.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for s in &self.sections {
            out.push_str(&format!("# {}\n", s.name));
            out.push_str(&s.columns.join("\t"));
            out.push('\n');
            for r in &s.rows {
                out.push_str(&r.iter().map(Cell::tsv).collect::<Vec<_>>().join("\t"));
                out.push('\n');
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut sections = Map::new();
        for s in &self.sections {
            let rows: Vec<Value> = s.rows.iter().map(|r| r.iter().map(Cell::json).collect()).collect();
            sections.insert(s.name.clone(), json!({ "columns": s.columns, "rows": rows }));
        }
        let doc = json!({
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "datum": self.datum,
            "sections": sections,
        });
        serde_json::to_string_pretty(&doc).expect("report serializes") + "\n"
    }
}
