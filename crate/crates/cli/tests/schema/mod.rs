//! Validator for the subset of JSON Schema used by `schema/report.schema.json`:
//! `type`, `enum`, `properties`, `required`, `additionalProperties`, `items`,
//! `minimum`, `anyOf` and local `$ref`s.

use serde_json::Value;

pub struct Schema {
    root: Value,
}

impl Schema {
    pub fn load() -> Self {
        let path = concat!(env!("CARGO_MANIFEST_DIR"), "/schema/report.schema.json");
        let root = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
        Self { root }
    }

    /// Errors as `path: message`; empty when `value` conforms.
    pub fn validate(&self, value: &Value) -> Vec<String> {
        let mut errors = Vec::new();
        self.check(&self.root, value, "$", &mut errors);
        errors
    }

    fn resolve<'a>(&'a self, reference: &str) -> &'a Value {
        let pointer = reference.strip_prefix('#').expect("only local references");
        self.root.pointer(pointer).unwrap_or_else(|| panic!("dangling reference {reference}"))
    }

    fn check(&self, schema: &Value, v: &Value, at: &str, errors: &mut Vec<String>) {
        if let Some(r) = schema.get("$ref").and_then(Value::as_str) {
            self.check(self.resolve(r), v, at, errors);
        }
        if let Some(options) = schema.get("anyOf").and_then(Value::as_array) {
            let ok = options.iter().any(|s| {
                let mut sub = Vec::new();
                self.check(s, v, at, &mut sub);
                sub.is_empty()
            });
            if !ok {
                errors.push(format!("{at}: matches no alternative"));
            }
        }
        if let Some(t) = schema.get("type") {
            let allowed: Vec<&str> = match t {
                Value::String(s) => vec![s.as_str()],
                Value::Array(a) => a.iter().filter_map(Value::as_str).collect(),
                _ => panic!("bad type keyword"),
            };
            if !allowed.iter().any(|t| type_matches(t, v)) {
                errors.push(format!("{at}: expected {allowed:?}, got {v}"));
                return;
            }
        }
        if let Some(options) = schema.get("enum").and_then(Value::as_array) {
            if !options.contains(v) {
                errors.push(format!("{at}: {v} not in enum"));
            }
        }
        if let (Some(min), Some(x)) = (schema.get("minimum").and_then(Value::as_f64), v.as_f64()) {
            if x < min {
                errors.push(format!("{at}: {x} < {min}"));
            }
        }
        if let Value::Object(map) = v {
            let props = schema.get("properties").and_then(Value::as_object);
            for key in schema.get("required").and_then(Value::as_array).into_iter().flatten() {
                let key = key.as_str().unwrap();
                if !map.contains_key(key) {
                    errors.push(format!("{at}: missing `{key}`"));
                }
            }
            for (key, child) in map {
                let path = format!("{at}.{key}");
                match (props.and_then(|p| p.get(key)), schema.get("additionalProperties")) {
                    (Some(s), _) => self.check(s, child, &path, errors),
                    (None, Some(Value::Bool(false))) => errors.push(format!("{path}: unexpected property")),
                    (None, Some(s @ Value::Object(_))) => self.check(s, child, &path, errors),
                    (None, _) => {}
                }
            }
        }
        if let (Value::Array(items), Some(s)) = (v, schema.get("items")) {
            for (i, item) in items.iter().enumerate() {
                self.check(s, item, &format!("{at}[{i}]"), errors);
            }
        }
    }
}

fn type_matches(t: &str, v: &Value) -> bool {
    match t {
        "null" => v.is_null(),
        "boolean" => v.is_boolean(),
        "integer" => v.is_i64() || v.is_u64(),
        "number" => v.is_number(),
        "string" => v.is_string(),
        "array" => v.is_array(),
        "object" => v.is_object(),
        _ => panic!("unknown type {t}"),
    }
}
