#include "optic/demos.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <functional>
#include <sstream>

#include "optic/path.hpp"

namespace optic::demos {

namespace {

using flowers::Flower;

// Splits "street, code, city" into a record; anything else misses.
DynOptic postal_prism() {
    return VPrism{
        [](const Value& s) {
            if (!s.is_string()) return Either<Value, Value>::left(s);
            const std::string& text = s.get_ref<const std::string&>();
            std::vector<std::string> parts;
            std::size_t from = 0;
            while (true) {
                std::size_t at = text.find(", ", from);
                if (at == std::string::npos) {
                    parts.push_back(text.substr(from));
                    break;
                }
                parts.push_back(text.substr(from, at - from));
                from = at + 2;
            }
            if (parts.size() != 3 || parts[0].empty() || parts[1].empty() || parts[2].empty())
                return Either<Value, Value>::left(s);
            Value record = Value::object();
            record["street"] = parts[0];
            record["code"] = parts[1];
            record["city"] = parts[2];
            return Either<Value, Value>::right(record);
        },
        [](const Value& record) {
            return Value(expect_text(expect_object_field(record, "street"), "street") + ", " +
                         expect_text(expect_object_field(record, "code"), "code") + ", " +
                         expect_text(expect_object_field(record, "city"), "city"));
        },
    };
}

// Focuses the domain part of an email string.
DynOptic domain_lens() {
    auto split_at = [](const Value& s) {
        const std::string& text = expect_text(s, "email");
        std::size_t at = text.find('@');
        if (at == std::string::npos) throw DocTypeError("email without '@': " + text);
        return at;
    };
    return VLens{
        [split_at](const Value& s) {
            return Value(s.get_ref<const std::string&>().substr(split_at(s) + 1));
        },
        [split_at](const Value& s, const Value& b) {
            return Value(s.get_ref<const std::string&>().substr(0, split_at(s) + 1) +
                         expect_text(b, "domain"));
        },
    };
}

std::string upper(std::string text) {
    for (char& c : text) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return text;
}

std::string pad(const std::string& text, std::size_t width) {
    std::string out = text;
    while (out.size() < width) out += ' ';
    return out;
}

void print_mail_table(std::ostringstream& out, const Value& list) {
    for (const auto& row : list) {
        out << "  " << pad(row.at("name").get<std::string>(), 15) << "| "
            << pad(row.at("email").get<std::string>(), 24) << "| "
            << row.at("frequency").get<std::string>() << "\n";
    }
}

void print_flower_fields(std::ostringstream& out, const char* indent, const Value& measurements,
                         const std::string* species) {
    const char* labels[4] = {"Sepal length:", "Sepal width: ", "Petal length:", "Petal width: "};
    for (std::size_t i = 0; i < 4; ++i)
        out << indent << labels[i] << " " << format_measurement(measurements[i].get<double>())
            << "\n";
    if (species) out << indent << "Species:      " << *species << "\n";
}

} // namespace

std::string format_measurement(double x) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.3f", x);
    std::string text = buffer;
    while (text.size() > 1 && text.back() == '0') text.pop_back();
    if (!text.empty() && text.back() == '.') text += '0';
    return text;
}

std::string address_demo() {
    std::ostringstream out;
    const Value address = "45 Banbury Rd, OX1 3QD, Oxford";
    DynOptic postal = postal_prism();
    DynOptic street = compose(postal, path::compile(".street"));
    DynOptic city = compose(postal, path::compile(".city"));

    out << "address: " << address.get<std::string>() << "\n";
    auto record = dyn_preview(postal, address);
    out << "postal match:\n";
    out << "  street: " << record->at("street").get<std::string>() << "\n";
    out << "  code:   " << record->at("code").get<std::string>() << "\n";
    out << "  city:   " << record->at("city").get<std::string>() << "\n";

    out << "street preview: " << dyn_preview(street, address)->get<std::string>() << "\n";
    Value moved = dyn_set(street, address, Value("7 Banbury Rd"));
    out << "street set to 7 Banbury Rd: " << moved.get<std::string>() << "\n";
    Value abroad = dyn_over(
        city, [](const Value& c) { return Value(c.get<std::string>() + " (UK)"); }, address);
    out << "city suffixed with (UK): " << abroad.get<std::string>() << "\n";

    const Value malformed = "Oxford";
    out << "malformed address: " << malformed.get<std::string>() << "\n";
    if (auto miss = dyn_preview(street, malformed); !miss)
        out << "street preview: no match, value passes through unchanged\n";
    return out.str();
}

std::string mail_demo() {
    std::ostringstream out;
    Value list = Value::array();
    auto add = [&list](const char* name, const char* email, const char* frequency) {
        Value row = Value::object();
        row["name"] = name;
        row["email"] = email;
        row["frequency"] = frequency;
        list.push_back(row);
    };
    add("Turing, Alan", "turing@manchester.ac.uk", "Daily");
    add("Noether, Emily", "emmynoether@fau.eu", "Monthly");
    add("Gauss, Carl F.", "gauss@goettingen.de", "Weekly");

    DynOptic mails = path::compile("each .email");
    DynOptic domains = compose(mails, domain_lens());

    out << "mailing list:\n";
    print_mail_table(out, list);
    out << "emails: " << Value(dyn_to_list(mails, list)).dump() << "\n";
    out << "domains: " << Value(dyn_to_list(domains, list)).dump() << "\n";
    Value shouted = dyn_over(
        domains, [](const Value& d) { return Value(upper(d.get<std::string>())); }, list);
    out << "uppercase domains:\n";
    print_mail_table(out, shouted);
    return out.str();
}

std::string iris_demo(const std::vector<Flower>& rows, IrisAgg agg) {
    std::ostringstream out;
    std::vector<Value> dataset;
    dataset.reserve(rows.size());
    for (const auto& f : rows) dataset.push_back(flowers::flower_to_value(f));

    DynOptic nearest = flowers::measure_nearest_optic();

    out << "dataset: " << dataset.size() << " flowers\n";
    out << "measurements of flower 1:\n";
    print_flower_fields(out, "  ", dyn_get(nearest, dataset.at(1)), nullptr);

    const Value query = flowers::measurements_to_value({4.8, 3.1, 1.5, 0.1});
    Value classified = upcast(nearest, OpticKind::ListLens)
                           .as<VListLens>()
                           .classify(dataset, query);
    out << "classify measurements (4.8, 3.1, 1.5, 0.1):\n";
    print_flower_fields(out, "  ", classified.at("measurements"),
                        &classified.at("species").get_ref<const std::string&>());

    DynOptic pipeline = compose(nearest, flowers::aggregate_optic());
    const char* fold_name = agg == IrisAgg::Mean ? "mean" : "max";
    std::function<Value(const std::vector<Value>&)> fold;
    if (agg == IrisAgg::Mean) {
        fold = [](const std::vector<Value>& xs) {
            double sum = 0;
            for (const auto& x : xs) sum += x.get<double>();
            return Value(sum / static_cast<double>(xs.size()));
        };
    } else {
        fold = [](const std::vector<Value>& xs) {
            double best = xs.at(0).get<double>();
            for (const auto& x : xs) best = std::max(best, x.get<double>());
            return Value(best);
        };
    }
    Value folded = kaleidoscope_apply(upcast(pipeline, OpticKind::Kaleidoscope).as<VKaleidoscope>(),
                                      fold, dataset);
    out << "aggregate with " << fold_name << " (pipeline kind: " << kind_name(pipeline.kind())
        << "):\n";
    print_flower_fields(out, "  ", folded.at("measurements"),
                        &folded.at("species").get_ref<const std::string&>());
    return out.str();
}

} // namespace optic::demos
