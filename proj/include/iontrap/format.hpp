// Deterministic text output: fixed numeric formatting (17 significant
// digits, scientific notation) so identical inputs produce byte-identical
// CSV/JSON artifacts, plus a minimal ordered JSON writer that keeps that
// formatting inside JSON numbers.

#pragma once

#include <string>
#include <vector>

namespace iontrap {

// "%.16e": 17 significant digits, round-trips any double exactly.
std::string fmt_sci(double v);

// Value rounded to two significant figures, rendered like "8.7e-04".
// Used for comparisons against published two-digit tables.
std::string fmt_2sig(double v);

// Append-only JSON writer for flat objects/arrays with deterministic field
// order. Numbers are emitted with fmt_sci.
class JsonWriter {
public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array(const std::string& key);
    JsonWriter& begin_object_in_array();
    JsonWriter& end_array();
    JsonWriter& field(const std::string& key, double value);
    JsonWriter& field(const std::string& key, int value);
    JsonWriter& field(const std::string& key, const std::string& value);
    JsonWriter& field(const std::string& key, const std::vector<double>& values);

    std::string str() const { return out_; }

private:
    void comma();
    std::string out_;
    bool need_comma_ = false;
};

// Writes content to `path`, or to stdout when path is empty or "-".
void write_text_output(const std::string& path, const std::string& content);

} // namespace iontrap
