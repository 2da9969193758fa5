#pragma once

// JSON files for structures, actions and extensions.
//
// Structure: {"field": {"kind": "Q"} | {"kind": "Fp", "p": 5}, "name", "dim", "basis",
//   "mul": [[i, j, k, "c"], ...]      e_i·e_j has coefficient c on e_k
//   "unit": ["c", ...]
//   "comul": [[i, j, k, "c"], ...]    Δ(e_i) has coefficient c on e_j⊗e_k
//   "counit": ["c", ...]
//   "antipode_left", "antipode_right": dense row-major matrices (optional)}
// Action: {"acting": <structure>, "acted": <structure>, "act": <map>}
// Extension: {"X", "A", "B": <structure>, "kappa", "alpha", "e", "lambda": <map>}
// A nested structure is either inline or a path relative to the containing file.
// Maps are {"rows": r, "cols": c, "entries": [[row, col, "c"], ...]}.
//
// Serialization is canonical: sorted keys, sorted triples, lowest-terms scalars.

#include <string>

#include <json.hpp>

#include "hopfsplit/extensions.hpp"

namespace hopfsplit {

using Json = nlohmann::json;

enum class FileKind { structure, action, extension };

std::string to_string(FileKind kind);

/// Reads a file ("-" for stdin) and parses it; ParseError reports line and column.
Json load_json(const std::string& path);

Json parse_json(const std::string& text, const std::string& source = "<input>");

FileKind detect_kind(const Json& doc);

/// The ground field declared by the document (or by its first nested structure).
FieldSpec document_field(const Json& doc, const std::string& base_dir);

template <class S>
Bialgebra<S> structure_from_json(const Json& doc, const std::string& base_dir = ".");

template <class S>
ActionData<S> action_from_json(const Json& doc, const std::string& base_dir = ".");

template <class S>
SplitExtension<S> extension_from_json(const Json& doc, const std::string& base_dir = ".");

template <class S>
LinMap<S> map_from_json(const Json& doc, const Space& domain, const Space& codomain, const std::string& key);

template <class S>
Json to_json(const LinMap<S>& f);

template <class S>
Json to_json(const Bialgebra<S>& a);

template <class S>
Json to_json(const ActionData<S>& a);

template <class S>
Json to_json(const SplitExtension<S>& s);

/// Two-space indented, sorted keys, trailing newline.
std::string dump_canonical(const Json& doc);

/// Parse then serialize again.
std::string canonicalize(const std::string& text, const std::string& base_dir = ".");

/// Directory part of a path ("." for stdin or bare names).
std::string directory_of(const std::string& path);

}  // namespace hopfsplit
