//! Aligned plain-text rendering of JSON reports.

use serde_json::Value;

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".to_string(),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            items.iter().map(cell).collect::<Vec<_>>().join(" ")
        }
        other => other.to_string(),
    }
}

fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..cols).map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r.iter().enumerate().map(|(c, s)| format!("{s:<w$}", w = widths[c])).collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

/// Objects become `key value` tables; arrays of objects become nested
/// tables with one column per key.
pub fn render(v: &Value) -> String {
    let Value::Object(map) = v else {
        return format!("{}\n", cell(v));
    };
    let mut rows = Vec::new();
    let mut nested = String::new();
    for (k, val) in map {
        match val {
            Value::Array(items) if !items.is_empty() && items.iter().all(Value::is_object) => {
                let keys: Vec<&String> = items[0].as_object().map(|o| o.keys().collect()).unwrap_or_default();
                let mut sub = vec![keys.iter().map(|k| k.to_string()).collect::<Vec<_>>()];
                for it in items {
                    sub.push(keys.iter().map(|k| cell(&it[k.as_str()])).collect());
                }
                nested.push_str(&format!("\n{k}:\n"));
                nested.push_str(&table(&sub));
            }
            _ => rows.push(vec![k.clone(), cell(val)]),
        }
    }
    let mut out = table(&rows);
    out.push_str(&nested);
    out
}
