#include "slcs/script.hpp"

#include <cctype>
#include <future>
#include <map>
#include <optional>
#include <unordered_map>

#include "slcs/errors.hpp"
#include "slcs/parser.hpp"

namespace slcs {

namespace {

struct RawStatement {
    std::string text;        // comment-free statement body, without ';'
    std::size_t offset = 0;  // offset of text[0] in the script
};

std::size_t line_of(std::string_view script, std::size_t offset) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < offset && i < script.size(); ++i)
        if (script[i] == '\n') ++line;
    return line;
}

std::size_t column_of(std::string_view script, std::size_t offset) {
    std::size_t column = 1;
    for (std::size_t i = offset; i > 0 && script[i - 1] != '\n'; --i) ++column;
    return column;
}

[[noreturn]] void fail(std::string_view script, std::size_t offset, const std::string& message) {
    throw ParseError("line " + std::to_string(line_of(script, offset)) + ": " + message,
                     column_of(script, offset));
}

// Splits on ';' outside string literals, blanking '#' comments. Comment bytes are
// replaced by spaces so offsets into the statement still map back to the script.
std::vector<RawStatement> split_statements(std::string_view script) {
    std::vector<RawStatement> out;
    RawStatement current;
    bool in_string = false;
    bool in_comment = false;
    for (std::size_t i = 0; i < script.size(); ++i) {
        char c = script[i];
        if (in_comment) {
            if (c == '\n') in_comment = false;
            else c = ' ';
        } else if (in_string) {
            if (c == '"') in_string = false;
            else if (c == '\n') fail(script, i, "unterminated string literal");
        } else if (c == '"') {
            in_string = true;
        } else if (c == '#') {
            in_comment = true;
            c = ' ';
        } else if (c == ';') {
            out.push_back(std::move(current));
            current = RawStatement{};
            current.offset = i + 1;
            continue;
        }
        if (current.text.empty()) current.offset = i;
        current.text += c;
    }
    if (in_string) fail(script, script.size(), "unterminated string literal");
    for (char c : current.text)
        if (!std::isspace(static_cast<unsigned char>(c))) fail(script, current.offset, "missing ';' after statement");
    return out;
}

class StatementReader {
public:
    StatementReader(std::string_view script, const RawStatement& raw) : script_(script), raw_(raw) {}

    bool at_end() {
        skip_space();
        return pos_ >= raw_.text.size();
    }

    std::string word() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < raw_.text.size() &&
               (std::isalnum(static_cast<unsigned char>(raw_.text[pos_])) || raw_.text[pos_] == '_' ||
                raw_.text[pos_] == '-'))
            ++pos_;
        if (pos_ == start) error(start, "expected a name");
        return raw_.text.substr(start, pos_ - start);
    }

    std::string string_literal() {
        skip_space();
        if (pos_ >= raw_.text.size() || raw_.text[pos_] != '"') error(pos_, "expected a string literal");
        const std::size_t start = ++pos_;
        while (raw_.text[pos_] != '"') ++pos_;
        return raw_.text.substr(start, pos_++ - start);
    }

    void expect(char c) {
        skip_space();
        if (pos_ >= raw_.text.size() || raw_.text[pos_] != c) error(pos_, std::string("expected '") + c + "'");
        ++pos_;
    }

    std::pair<Formula, std::string> formula() {
        skip_space();
        const std::size_t start = pos_;
        std::string text = raw_.text.substr(start);
        while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
        if (text.empty()) error(start, "expected a formula");
        try {
            Formula f = parse_formula(text);
            pos_ = raw_.text.size();
            return {f, text};
        } catch (const ParseError& e) {
            const std::string message = e.what();
            error(start + e.column() - 1, message.substr(0, message.rfind(" at column ")));
        }
    }

    std::size_t line() const { return line_of(script_, raw_.offset + first_token()); }

    [[noreturn]] void error(std::size_t pos, const std::string& message) const {
        fail(script_, raw_.offset + pos, message);
    }

private:
    std::size_t first_token() const {
        std::size_t i = 0;
        while (i < raw_.text.size() && std::isspace(static_cast<unsigned char>(raw_.text[i]))) ++i;
        return i;
    }

    void skip_space() {
        while (pos_ < raw_.text.size() && std::isspace(static_cast<unsigned char>(raw_.text[pos_]))) ++pos_;
    }

    std::string_view script_;
    const RawStatement& raw_;
    std::size_t pos_ = 0;
};

bool is_plain_identifier(const std::string& name) {
    try {
        const Formula f = parse_formula(name);
        return f.op() == Op::Atom && f.letter() == name;
    } catch (const ParseError&) {
        return false;
    }
}

} // namespace

Script parse_script(std::string_view text) {
    Script script;
    for (const RawStatement& raw : split_statements(text)) {
        StatementReader reader(text, raw);
        if (reader.at_end()) continue;
        const std::size_t line = reader.line();
        const std::string keyword = reader.word();
        if (keyword == "let") {
            std::string name = reader.word();
            if (!is_plain_identifier(name)) reader.error(0, "'" + name + "' cannot be bound: it is a reserved word");
            reader.expect('=');
            auto [f, source] = reader.formula();
            script.statements.emplace_back(LetBinding{std::move(name), f, line});
        } else if (keyword == "paint") {
            const std::string color_text = reader.string_literal();
            auto color = parse_hex_color(color_text);
            if (!color) reader.error(0, "paint color must be \"#RRGGBB\", got \"" + color_text + "\"");
            auto [f, source] = reader.formula();
            script.statements.emplace_back(PaintCommand{*color, f, std::move(source), line});
        } else if (keyword == "save") {
            std::string path = reader.string_literal();
            if (path.empty()) reader.error(0, "save path must be nonempty");
            if (!reader.at_end()) reader.error(0, "unexpected text after save path");
            script.statements.emplace_back(SaveCommand{std::move(path), line});
        } else {
            reader.error(0, "unknown statement '" + keyword + "'");
        }
    }
    return script;
}

namespace {

class Resolver {
public:
    explicit Resolver(const std::map<std::string, Formula>& bound) : bound_(bound) {}

    Formula run(const Formula& f) {
        if (auto it = memo_.find(f.id()); it != memo_.end()) return it->second;
        Formula out = rewrite(f);
        memo_.emplace(f.id(), out);
        return out;
    }

private:
    Formula rewrite(const Formula& f) {
        switch (arity(f.op())) {
        case 0:
            if (f.op() == Op::Atom)
                if (auto it = bound_.find(f.letter()); it != bound_.end()) return it->second;
            return f;
        case 1: {
            Formula a = run(f.lhs());
            return a.id() == f.lhs().id() ? f : Formula::unary(f.op(), a);
        }
        default: {
            Formula a = run(f.lhs());
            Formula b = run(f.rhs());
            return a.id() == f.lhs().id() && b.id() == f.rhs().id() ? f : Formula::binary(f.op(), a, b);
        }
        }
    }

    const std::map<std::string, Formula>& bound_;
    std::unordered_map<const void*, Formula> memo_;
};

} // namespace

Formula resolve_bindings(const Formula& f, const std::vector<LetBinding>& bindings) {
    std::map<std::string, Formula> bound;
    for (const auto& b : bindings) bound.insert_or_assign(b.name, Resolver(bound).run(b.formula));
    return Resolver(bound).run(f);
}

ScriptResult run_script(const RasterImage& input, const Script& script, const ScriptOptions& options) {
    std::map<std::string, Formula> bound;
    std::map<std::string, std::size_t> bound_at;
    std::map<std::string, std::size_t> later_names;
    for (const auto& s : script.statements)
        if (const auto* let = std::get_if<LetBinding>(&s)) later_names.emplace(let->name, let->line);

    struct PendingPaint {
        const PaintCommand* command;
        Formula resolved;
    };
    std::vector<PendingPaint> paints;
    std::map<std::string, ColorPredicate> predicates;
    bool saved = false;

    auto resolve_checked = [&](const Formula& f, std::size_t line) {
        Formula resolved = Resolver(bound).run(f);
        for (const auto& letter : atoms(resolved)) {
            if (auto predicate = parse_color_atom(letter)) {
                predicates.emplace(letter, *predicate);
                continue;
            }
            if (options.check.unknown_atoms == UnknownAtomPolicy::Empty) continue;
            if (later_names.contains(letter))
                throw SemanticError("line " + std::to_string(line) + ": '" + letter +
                                    "' is used before its definition on line " +
                                    std::to_string(later_names.at(letter)));
            throw SemanticError("line " + std::to_string(line) + ": undefined name '" + letter + "'");
        }
        return resolved;
    };

    for (const auto& s : script.statements) {
        if (const auto* let = std::get_if<LetBinding>(&s)) {
            if (bound.contains(let->name))
                throw SemanticError("line " + std::to_string(let->line) + ": '" + let->name +
                                    "' is already defined on line " + std::to_string(bound_at.at(let->name)));
            Formula resolved = resolve_checked(let->formula, let->line);
            bound.emplace(let->name, resolved);
            bound_at.emplace(let->name, let->line);
        } else if (const auto* paint_cmd = std::get_if<PaintCommand>(&s)) {
            if (saved)
                throw SemanticError("line " + std::to_string(paint_cmd->line) + ": paint after save");
            paints.push_back({paint_cmd, resolve_checked(paint_cmd->formula, paint_cmd->line)});
        } else {
            saved = true;
        }
    }

    ScriptResult result{input, {}, {}};
    std::vector<CheckOutcome> outcomes;
    if (!paints.empty()) {
        const ClosureModel model = image_to_model(input, options.adjacency, predicates);
        if (options.parallel && paints.size() > 1) {
            std::vector<std::future<CheckOutcome>> jobs;
            for (const auto& p : paints)
                jobs.push_back(std::async(std::launch::async,
                                          [&model, &p, &options] { return check(model, p.resolved, options.check); }));
            for (auto& job : jobs) outcomes.push_back(job.get());
        } else {
            for (const auto& p : paints) outcomes.push_back(check(model, p.resolved, options.check));
        }
    }

    std::size_t next_paint = 0;
    for (const auto& s : script.statements) {
        if (std::holds_alternative<PaintCommand>(s)) {
            const PaintCommand& cmd = *paints[next_paint].command;
            const CheckOutcome& outcome = outcomes[next_paint];
            result.image = paint(result.image, outcome.satisfying, cmd.color);
            result.paints.push_back({cmd.source, cmd.color, cmd.line, outcome.satisfying.count(), outcome.stats});
            ++next_paint;
        } else if (const auto* save = std::get_if<SaveCommand>(&s)) {
            write_image(result.image, save->path);
            result.saved.push_back(save->path);
        }
    }
    return result;
}

} // namespace slcs
