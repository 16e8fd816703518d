#pragma once

#include <string>

#include "latticefiber/barcode.hpp"
#include "latticefiber/merge_tree.hpp"

namespace latticefiber {

// Line-oriented text records, UTF-8, newline-terminated.
//
// Tree record (always full; event k merges the blocks containing a and b):
//   merge-tree n=<n>
//   1: <a> <b>
//   ...
//   n: <a> <b>
//
// Barcode record (full or partial; line j pairs birth i with death j):
//   barcode n=<n>
//   <i> -> 1
//   ...
//   <i> -> k
//
// Printing is canonical and byte-deterministic; parse(print(x)) == x and
// print(parse(text)) == text on canonical files. Parsed tree events may use
// any block representatives; printing always uses block minima.

enum class RecordKind { MergeTreeRecord, BarcodeRecord };

// Inspects the header line. Throws ValidationError on an unknown header.
RecordKind detect_record_kind(const std::string& text);

MergeTree parse_tree_record(const std::string& text);
PartialBarcode parse_barcode_record(const std::string& text);

std::string print_tree_record(const MergeTree& t);
std::string print_barcode_record(const Barcode& b);
std::string print_barcode_record(const PartialBarcode& b);

}  // namespace latticefiber
