#include "iontrap/format.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "iontrap/errors.hpp"

namespace iontrap {

std::string fmt_sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

std::string fmt_2sig(double v) {
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%.1e", v);
    return buf;
}

void JsonWriter::comma() {
    if (need_comma_)
        out_ += ',';
    need_comma_ = true;
}

JsonWriter& JsonWriter::begin_object() {
    if (!out_.empty())
        comma();
    out_ += '{';
    need_comma_ = false;
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    out_ += '}';
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::begin_array(const std::string& key) {
    comma();
    out_ += '"' + key + "\":[";
    need_comma_ = false;
    return *this;
}

JsonWriter& JsonWriter::begin_object_in_array() {
    comma();
    out_ += '{';
    need_comma_ = false;
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    out_ += ']';
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::field(const std::string& key, double value) {
    comma();
    out_ += '"' + key + "\":" + fmt_sci(value);
    return *this;
}

JsonWriter& JsonWriter::field(const std::string& key, int value) {
    comma();
    out_ += '"' + key + "\":" + std::to_string(value);
    return *this;
}

JsonWriter& JsonWriter::field(const std::string& key, const std::string& value) {
    comma();
    out_ += '"' + key + "\":\"" + value + '"';
    return *this;
}

JsonWriter& JsonWriter::field(const std::string& key, const std::vector<double>& values) {
    begin_array(key);
    for (double v : values) {
        comma();
        out_ += fmt_sci(v);
    }
    end_array();
    return *this;
}

void write_text_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ConfigError("output_open", "cannot open output file '" + path + "'");
    out << content;
}

} // namespace iontrap
