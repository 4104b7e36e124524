#include "iontrap/iondb.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "iontrap/format.hpp"

namespace iontrap {

namespace {

IonSpecies make_ion(std::string name, double I, double gamma_2pi_mhz, double nu_f_thz,
                    double nu_0_ghz) {
    IonSpecies ion;
    ion.name = std::move(name);
    ion.nuclear_spin_I = I;
    ion.gamma = kTwoPi * gamma_2pi_mhz * 1e6;
    ion.omega_F = kTwoPi * nu_f_thz * 1e12;
    ion.omega_0 = kTwoPi * nu_0_ghz * 1e9;
    ion.validate();
    return ion;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ','))
        out.push_back(field);
    return out;
}

double parse_field(const std::string& text, const std::string& field, int line_no) {
    std::size_t pos = 0;
    double v = 0;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw ConfigError("ion_db_parse", "ion db line " + std::to_string(line_no) +
                                              ", field '" + field + "': not a number: '" +
                                              text + "'");
    }
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
        ++pos;
    if (pos != text.size())
        throw ConfigError("ion_db_parse", "ion db line " + std::to_string(line_no) +
                                              ", field '" + field + "': trailing junk in '" +
                                              text + "'");
    return v;
}

} // namespace

const std::vector<IonSpecies>& builtin_ion_table() {
    static const std::vector<IonSpecies> table = {
        make_ion("9Be+", 1.5, 19.4, 0.198, 1.25),
        make_ion("25Mg+", 2.5, 43.0, 2.75, 1.79),
        make_ion("43Ca+", 3.5, 22.4, 6.7, 3.26),
        make_ion("67Zn+", 2.5, 76.0, 26.2, 7.2),
        make_ion("87Sr+", 4.5, 21.7, 24.0, 5.00),
        make_ion("113Cd+", 0.5, 44.2, 74.0, 15.2),
        make_ion("199Hg+", 0.5, 54.7, 274.0, 40.5),
    };
    return table;
}

IonSpecies find_ion(const std::vector<IonSpecies>& db, const std::string& name) {
    for (const auto& ion : db)
        if (ion.name == name)
            return ion;
    throw ConfigError("ion_not_found", "no ion named '" + name + "' in database");
}

std::vector<IonSpecies> load_ion_db(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("ion_db_open", "cannot open ion database '" + path + "'");

    static const std::vector<std::string> kColumns = {"name", "I", "gamma_2pi_MHz", "nu_F_THz",
                                                      "nu_0_GHz"};
    std::vector<IonSpecies> ions;
    std::string line;
    int line_no = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        auto fields = split_csv_line(line);
        if (!saw_header) {
            if (fields.size() != kColumns.size() || fields[0] != "name")
                throw ConfigError("ion_db_parse",
                                  "ion db line " + std::to_string(line_no) +
                                      ": expected header 'name,I,gamma_2pi_MHz,nu_F_THz,nu_0_GHz'");
            saw_header = true;
            continue;
        }
        if (fields.size() != kColumns.size())
            throw ConfigError("ion_db_parse", "ion db line " + std::to_string(line_no) + ": " +
                                                  std::to_string(fields.size()) +
                                                  " fields, expected 5");
        try {
            ions.push_back(make_ion(fields[0], parse_field(fields[1], "I", line_no),
                                    parse_field(fields[2], "gamma_2pi_MHz", line_no),
                                    parse_field(fields[3], "nu_F_THz", line_no),
                                    parse_field(fields[4], "nu_0_GHz", line_no)));
        } catch (const PreconditionError& e) {
            throw ConfigError("ion_db_invalid", "ion db line " + std::to_string(line_no) +
                                                    " ('" + fields[0] + "'): " + e.what());
        }
    }
    return ions;
}

std::string ion_db_csv(const std::vector<IonSpecies>& ions) {
    std::string out = "name,I,gamma_2pi_MHz,nu_F_THz,nu_0_GHz\n";
    for (const auto& ion : ions) {
        out += ion.name;
        out += ',' + fmt_sci(ion.nuclear_spin_I);
        out += ',' + fmt_sci(ion.gamma / kTwoPi / 1e6);
        out += ',' + fmt_sci(ion.omega_F / kTwoPi / 1e12);
        out += ',' + fmt_sci(ion.omega_0 / kTwoPi / 1e9);
        out += '\n';
    }
    return out;
}

} // namespace iontrap
