//! JSON file formats: algebras, bialgebras, bilinear forms, r-matrices, and
//! matched pairs. Indices are 1-based in files; scalars serialize as strings
//! ("p/q" or "n" over Q, "r mod p" over GF(p)). Saving is canonical: entries
//! sorted, zero entries omitted, scalars reduced; a canonical file round-trips
//! byte-identically.

use crate::algebra::{Algebra, BilinearForm};
use crate::bialgebra::{Bialgebra, Coalgebra};
use crate::bimodule::MatchedPairData;
use crate::matrix::Matrix;
use crate::scalar::{Field, Scalar};
use crate::tensor::Tensor2;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
struct ProductEntry {
    i: usize,
    j: usize,
    out: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct SparseTerm {
    i: usize,
    j: usize,
    c: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct CoproductEntry {
    k: usize,
    out: Vec<SparseTerm>,
}

/// The one document shape shared by every file kind; loaders require the
/// sections relevant to their kind and reject everything else.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    #[serde(skip_serializing_if = "Option::is_none")]
    field: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    products: Option<Vec<ProductEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    coproducts: Option<Vec<CoproductEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gram: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<Vec<SparseTerm>>,
    #[serde(skip_serializing_if = "Option::is_none", rename = "b")]
    second: Option<Box<Document>>,
    #[serde(skip_serializing_if = "Option::is_none", rename = "lA")]
    l_a: Option<Vec<Vec<Vec<String>>>>,
    #[serde(skip_serializing_if = "Option::is_none", rename = "rA")]
    r_a: Option<Vec<Vec<Vec<String>>>>,
    #[serde(skip_serializing_if = "Option::is_none", rename = "lB")]
    l_b: Option<Vec<Vec<Vec<String>>>>,
    #[serde(skip_serializing_if = "Option::is_none", rename = "rB")]
    r_b: Option<Vec<Vec<Vec<String>>>>,
}

fn parse_document(text: &str) -> Result<Document> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

fn schema(field: &str, message: impl Into<String>) -> Error {
    Error::Schema {
        field: field.into(),
        message: message.into(),
    }
}

fn parse_field(doc: &Document) -> Result<Field> {
    let s = doc
        .field
        .as_deref()
        .ok_or_else(|| schema("field", "missing"))?;
    if s == "Q" {
        return Ok(Field::Q);
    }
    if let Some(inner) = s.strip_prefix("GF(").and_then(|t| t.strip_suffix(')')) {
        let p: u64 = inner
            .parse()
            .map_err(|_| schema("field", format!("bad prime in {s:?}")))?;
        return Ok(Field::Gf(p));
    }
    Err(schema("field", format!("expected \"Q\" or \"GF(p)\", got {s:?}")))
}

fn parse_dim(doc: &Document) -> Result<usize> {
    let dim = doc.dim.ok_or_else(|| schema("dim", "missing"))?;
    if dim == 0 {
        return Err(schema("dim", "must be positive"));
    }
    Ok(dim)
}

fn check_index(name: &str, idx: usize, dim: usize) -> Result<usize> {
    if idx == 0 || idx > dim {
        return Err(schema(
            name,
            format!("index {idx} out of range 1..={dim}"),
        ));
    }
    Ok(idx - 1)
}

fn algebra_from_doc(doc: &Document) -> Result<Algebra> {
    let field = parse_field(doc)?;
    let dim = parse_dim(doc)?;
    let mut a = Algebra::zero(field, dim);
    if let Some(products) = &doc.products {
        for e in products {
            let i = check_index("products.i", e.i, dim)?;
            let j = check_index("products.j", e.j, dim)?;
            if e.out.len() != dim {
                return Err(schema(
                    "products.out",
                    format!("expected {dim} coefficients, got {}", e.out.len()),
                ));
            }
            let out: Result<Vec<Scalar>> = e.out.iter().map(|s| field.parse(s)).collect();
            a.set_product(i, j, out?);
        }
    }
    Ok(a)
}

fn coalgebra_from_doc(doc: &Document, field: Field, dim: usize) -> Result<Coalgebra> {
    let mut c = Coalgebra::zero(field, dim);
    if let Some(entries) = &doc.coproducts {
        for e in entries {
            let k = check_index("coproducts.k", e.k, dim)?;
            for t in &e.out {
                let i = check_index("coproducts.out.i", t.i, dim)?;
                let j = check_index("coproducts.out.j", t.j, dim)?;
                c.cc.set(k, i, j, field.parse(&t.c)?);
            }
        }
    }
    Ok(c)
}

fn algebra_to_doc(a: &Algebra) -> Document {
    let mut products = Vec::new();
    for i in 0..a.dim {
        for j in 0..a.dim {
            let out = a.basis_product(i, j);
            if crate::matrix::vec_is_zero(&out) {
                continue;
            }
            products.push(ProductEntry {
                i: i + 1,
                j: j + 1,
                out: out.iter().map(|s| s.to_string()).collect(),
            });
        }
    }
    Document {
        field: Some(a.field.to_string()),
        dim: Some(a.dim),
        products: Some(products),
        ..Document::default()
    }
}

fn coproducts_to_doc(c: &Coalgebra) -> Vec<CoproductEntry> {
    let mut entries = Vec::new();
    for k in 0..c.dim {
        let mut out = Vec::new();
        for i in 0..c.dim {
            for j in 0..c.dim {
                let v = c.cc.get(k, i, j);
                if !v.is_zero() {
                    out.push(SparseTerm {
                        i: i + 1,
                        j: j + 1,
                        c: v.to_string(),
                    });
                }
            }
        }
        if !out.is_empty() {
            entries.push(CoproductEntry { k: k + 1, out });
        }
    }
    entries
}

fn render(doc: &Document) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("document serializes");
    s.push('\n');
    s
}

pub fn load_algebra(text: &str) -> Result<Algebra> {
    algebra_from_doc(&parse_document(text)?)
}

pub fn save_algebra(a: &Algebra) -> String {
    render(&algebra_to_doc(a))
}

/// A bialgebra file is an algebra file with a "coproducts" section; a missing
/// section means the zero coproduct.
pub fn load_bialgebra(text: &str) -> Result<Bialgebra> {
    let doc = parse_document(text)?;
    let a = algebra_from_doc(&doc)?;
    let c = coalgebra_from_doc(&doc, a.field, a.dim)?;
    Ok(Bialgebra::new(a, c))
}

pub fn save_bialgebra(b: &Bialgebra) -> String {
    let mut doc = algebra_to_doc(&b.alg);
    doc.coproducts = Some(coproducts_to_doc(&b.coa));
    render(&doc)
}

pub fn load_form(text: &str) -> Result<(Field, BilinearForm)> {
    let doc = parse_document(text)?;
    let field = parse_field(&doc)?;
    let gram = doc.gram.as_ref().ok_or_else(|| schema("gram", "missing"))?;
    let n = gram.len();
    let mut m = Matrix::zero(field, n, n);
    for (i, row) in gram.iter().enumerate() {
        if row.len() != n {
            return Err(schema("gram", "matrix must be square"));
        }
        for (j, s) in row.iter().enumerate() {
            m.set(i, j, field.parse(s)?);
        }
    }
    Ok((field, BilinearForm::new(m)))
}

pub fn save_form(field: Field, form: &BilinearForm) -> String {
    let n = form.dim();
    let gram = (0..n)
        .map(|i| (0..n).map(|j| form.gram.get(i, j).to_string()).collect())
        .collect();
    render(&Document {
        field: Some(field.to_string()),
        gram: Some(gram),
        ..Document::default()
    })
}

pub fn load_r_matrix(text: &str) -> Result<Tensor2> {
    let doc = parse_document(text)?;
    let field = parse_field(&doc)?;
    let dim = parse_dim(&doc)?;
    let mut r = Tensor2::zero(field, dim);
    if let Some(terms) = &doc.r {
        for t in terms {
            let i = check_index("r.i", t.i, dim)?;
            let j = check_index("r.j", t.j, dim)?;
            r.set(i, j, field.parse(&t.c)?);
        }
    }
    Ok(r)
}

pub fn save_r_matrix(r: &Tensor2) -> String {
    let mut terms = Vec::new();
    for i in 0..r.dim() {
        for j in 0..r.dim() {
            let v = r.get(i, j);
            if !v.is_zero() {
                terms.push(SparseTerm {
                    i: i + 1,
                    j: j + 1,
                    c: v.to_string(),
                });
            }
        }
    }
    render(&Document {
        field: Some(r.field().to_string()),
        dim: Some(r.dim()),
        r: Some(terms),
        ..Document::default()
    })
}

fn matrices_from_doc(
    name: &str,
    data: &Option<Vec<Vec<Vec<String>>>>,
    field: Field,
    count: usize,
    side: usize,
) -> Result<Vec<Matrix>> {
    let data = data
        .as_ref()
        .ok_or_else(|| schema(name, "missing"))?;
    if data.len() != count {
        return Err(schema(
            name,
            format!("expected {count} matrices, got {}", data.len()),
        ));
    }
    let mut out = Vec::with_capacity(count);
    for rows in data {
        if rows.len() != side || rows.iter().any(|r| r.len() != side) {
            return Err(schema(name, format!("matrices must be {side}x{side}")));
        }
        let mut m = Matrix::zero(field, side, side);
        for (i, row) in rows.iter().enumerate() {
            for (j, s) in row.iter().enumerate() {
                m.set(i, j, field.parse(s)?);
            }
        }
        out.push(m);
    }
    Ok(out)
}

fn matrices_to_doc(mats: &[Matrix]) -> Vec<Vec<Vec<String>>> {
    mats.iter()
        .map(|m| {
            (0..m.rows)
                .map(|i| (0..m.cols).map(|j| m.get(i, j).to_string()).collect())
                .collect()
        })
        .collect()
}

/// A matched-pair file is an algebra file (the first algebra) extended with a
/// nested "b" algebra and the four action-matrix lists.
pub fn load_matched_pair(text: &str) -> Result<MatchedPairData> {
    let doc = parse_document(text)?;
    let a = algebra_from_doc(&doc)?;
    let second = doc
        .second
        .as_ref()
        .ok_or_else(|| schema("b", "missing second algebra"))?;
    let b = algebra_from_doc(second)?;
    if b.field != a.field {
        return Err(Error::FieldMismatch(a.field.to_string(), b.field.to_string()));
    }
    let l_a = matrices_from_doc("lA", &doc.l_a, a.field, a.dim, b.dim)?;
    let r_a = matrices_from_doc("rA", &doc.r_a, a.field, a.dim, b.dim)?;
    let l_b = matrices_from_doc("lB", &doc.l_b, a.field, b.dim, a.dim)?;
    let r_b = matrices_from_doc("rB", &doc.r_b, a.field, b.dim, a.dim)?;
    Ok(MatchedPairData {
        a,
        b,
        l_a,
        r_a,
        l_b,
        r_b,
    })
}

pub fn save_matched_pair(d: &MatchedPairData) -> String {
    let mut doc = algebra_to_doc(&d.a);
    doc.second = Some(Box::new(algebra_to_doc(&d.b)));
    doc.l_a = Some(matrices_to_doc(&d.l_a));
    doc.r_a = Some(matrices_to_doc(&d.r_a));
    doc.l_b = Some(matrices_to_doc(&d.l_b));
    doc.r_b = Some(matrices_to_doc(&d.r_b));
    render(&doc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn algebra_round_trip_byte_identical() {
        let a = catalog::lambda2_1(Field::Q);
        let text = save_algebra(&a);
        let back = load_algebra(&text).unwrap();
        assert_eq!(back, a);
        assert_eq!(save_algebra(&back), text);
    }

    #[test]
    fn scalars_normalize_on_save() {
        let text = r#"{"field":"Q","dim":2,"products":[{"i":1,"j":1,"out":["0","2/4"]}]}"#;
        let a = load_algebra(text).unwrap();
        let saved = save_algebra(&a);
        assert!(saved.contains("\"1/2\""));
        assert!(!saved.contains("2/4"));
    }

    #[test]
    fn parse_error_carries_position() {
        match load_algebra("{\"field\": \"Q\",\n  \"dim\": }") {
            Err(Error::Parse { line, column, .. }) => {
                assert_eq!(line, 2);
                assert!(column > 0);
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn mixed_field_rejected() {
        let text = r#"{"field":"GF(2)","dim":1,"products":[{"i":1,"j":1,"out":["1/2"]}]}"#;
        assert!(matches!(load_algebra(text), Err(Error::Schema { .. })));
    }

    #[test]
    fn out_of_range_index_rejected() {
        let text = r#"{"field":"Q","dim":2,"products":[{"i":3,"j":1,"out":["0","0"]}]}"#;
        match load_algebra(text) {
            Err(Error::Schema { field, .. }) => assert_eq!(field, "products.i"),
            other => panic!("expected schema error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_key_rejected() {
        let text = r#"{"field":"Q","dim":1,"producs":[]}"#;
        assert!(matches!(load_algebra(text), Err(Error::Parse { .. })));
    }

    #[test]
    fn bialgebra_round_trip() {
        let b = catalog::lambda21_bialgebra(Field::Q);
        let text = save_bialgebra(&b);
        let back = load_bialgebra(&text).unwrap();
        assert_eq!(back, b);
        assert_eq!(save_bialgebra(&back), text);
        // An algebra file loads as a bialgebra with zero coproduct.
        let plain = load_bialgebra(&save_algebra(&b.alg)).unwrap();
        assert!(plain.coa.cc.is_zero());
    }

    #[test]
    fn gf_scalars_round_trip() {
        let a = catalog::lambda2_1(Field::Gf(5));
        let text = save_algebra(&a);
        assert!(text.contains("GF(5)"));
        assert!(text.contains("1 mod 5"));
        assert_eq!(load_algebra(&text).unwrap(), a);
    }

    #[test]
    fn form_round_trip() {
        let q = catalog::aa2_quadratic(Field::Q);
        let text = save_form(Field::Q, &q.form);
        let (field, back) = load_form(&text).unwrap();
        assert_eq!(field, Field::Q);
        assert_eq!(back, q.form);
        assert_eq!(save_form(field, &back), text);
    }

    #[test]
    fn r_matrix_round_trip() {
        let (_, r) = catalog::lambda21_symmetric_r(Field::Q);
        let text = save_r_matrix(&r);
        let back = load_r_matrix(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(save_r_matrix(&back), text);
    }

    #[test]
    fn matched_pair_round_trip() {
        let b = catalog::lambda21_bialgebra(Field::Q);
        let d = crate::bimodule::coregular_pair(&b.alg, &b.coa);
        let text = save_matched_pair(&d);
        let back = load_matched_pair(&text).unwrap();
        assert_eq!(back, d);
        assert_eq!(save_matched_pair(&back), text);
    }
}
