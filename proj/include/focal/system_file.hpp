#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "focal/errors.hpp"
#include "focal/poly_system.hpp"
#include "focal/rational.hpp"

namespace focal {

/// Text description of a cubic system
///
///   format = focal-system/1
///   prime = 29                 (omit for exact rational mode)
///   q2 = 3 8 5                 x^2 xy y^2       of  xdot =   y + q(x,y)
///   q3 = 3 25 20 18            x^3 x^2y xy^2 y^3
///   p2 = 27 9 22                                  ydot = -(x + p(x,y))
///   p3 = 11 20 4 3
///
/// The p-coefficients are those inside -(x + p), exactly as the system is
/// usually written; they are not negated. '#' starts a comment. Any other
/// key is kept as metadata.
struct SystemFile {
    std::optional<std::uint32_t> prime;
    CubicCoefficients<Rational> coefficients{};
    std::vector<std::pair<std::string, std::string>> metadata;

    static constexpr const char* kFormat = "focal-system/1";

    static SystemFile parse(std::istream& in) {
        SystemFile file;
        bool seen[4] = {false, false, false, false};
        bool format_seen = false;
        std::string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            auto eq = line.find('=');
            auto trim = [](std::string s) {
                auto b = s.find_first_not_of(" \t\r");
                auto e = s.find_last_not_of(" \t\r");
                return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
            };
            if (trim(line).empty()) continue;
            if (eq == std::string::npos)
                throw FormatError("line " + std::to_string(line_no) + ": expected 'key = value'");
            std::string key = trim(line.substr(0, eq));
            std::string value = trim(line.substr(eq + 1));
            if (key == "format") {
                if (value != kFormat) throw FormatError("field 'format': unsupported version '" + value + "'");
                format_seen = true;
            } else if (key == "prime") {
                try {
                    std::size_t used = 0;
                    unsigned long p = std::stoul(value, &used);
                    if (used != value.size()) throw std::invalid_argument("trailing");
                    file.prime = static_cast<std::uint32_t>(p);
                } catch (const std::logic_error&) {
                    throw FormatError("field 'prime': not an integer: '" + value + "'");
                }
            } else if (key == "q2" || key == "q3" || key == "p2" || key == "p3") {
                const int slot = (key[0] == 'q' ? 0 : 2) + (key[1] == '3' ? 1 : 0);
                const std::size_t len = key[1] == '2' ? 3 : 4;
                const std::size_t offset = (key[0] == 'q' ? 0 : 7) + (key[1] == '3' ? 3 : 0);
                std::istringstream values(value);
                std::vector<std::string> tokens;
                for (std::string t; values >> t;) tokens.push_back(t);
                if (tokens.size() != len)
                    throw FormatError("field '" + key + "': expected " + std::to_string(len) + " values, got " +
                                      std::to_string(tokens.size()));
                for (std::size_t i = 0; i < len; ++i) {
                    try {
                        file.coefficients[offset + i] = Rational::parse(tokens[i]);
                    } catch (const FormatError&) {
                        throw FormatError("field '" + key + "': not a number: '" + tokens[i] + "'");
                    }
                }
                seen[slot] = true;
            } else {
                file.metadata.emplace_back(key, value);
            }
        }
        if (!format_seen) throw FormatError("field 'format': missing (expected 'format = focal-system/1')");
        const char* names[4] = {"q2", "q3", "p2", "p3"};
        for (int i = 0; i < 4; ++i)
            if (!seen[i]) throw FormatError(std::string("field '") + names[i] + "': missing");
        if (file.prime) {
            for (std::size_t i = 0; i < kNumCoefficients; ++i) {
                const auto& c = file.coefficients[i];
                if (c.denominator() != 1 || c < Rational{0} || !(c < Rational{static_cast<std::int64_t>(*file.prime)}))
                    throw FormatError(std::string("field '") + part_name(i) + "': coefficient " + c.str() +
                                      " is not a residue in [0, " + std::to_string(*file.prime) + ")");
            }
        }
        return file;
    }

    static SystemFile parse(const std::string& text) {
        std::istringstream in(text);
        return parse(in);
    }

    void write(std::ostream& os) const {
        os << "format = " << kFormat << "\n";
        if (prime) os << "prime = " << *prime << "\n";
        const char* names[4] = {"q2", "q3", "p2", "p3"};
        const std::size_t offsets[4] = {0, 3, 7, 10};
        for (int k = 0; k < 4; ++k) {
            os << names[k] << " =";
            const std::size_t len = names[k][1] == '2' ? 3 : 4;
            for (std::size_t i = 0; i < len; ++i) os << " " << coefficients[offsets[k] + i];
            os << "\n";
        }
        for (const auto& [k, v] : metadata) os << k << " = " << v << "\n";
    }

    std::string str() const {
        std::ostringstream os;
        write(os);
        return os.str();
    }

    CubicCoefficients<Residue> residues(const PrimeField& field) const {
        CubicCoefficients<Residue> r;
        for (std::size_t i = 0; i < kNumCoefficients; ++i) r[i] = coefficients[i].reduce(field);
        return r;
    }

    static SystemFile from_residues(std::uint32_t p, const CubicCoefficients<Residue>& c) {
        SystemFile f;
        f.prime = p;
        for (std::size_t i = 0; i < kNumCoefficients; ++i) f.coefficients[i] = Rational{static_cast<std::int64_t>(c[i].value)};
        return f;
    }

    friend bool operator==(const SystemFile&, const SystemFile&) = default;

  private:
    static const char* part_name(std::size_t index) {
        if (index < 3) return "q2";
        if (index < 7) return "q3";
        if (index < 10) return "p2";
        return "p3";
    }
};

}  // namespace focal
