/** Extract the raw character spans of JSON numbers at chosen paths.
 *
 * Parsing a double and re-serializing it does not always reproduce the
 * original bytes (e.g. a server may write 1e+16 where JS prints
 * 10000000000000000), so the invariant panel displays the exact
 * substring of the response body instead.  Paths use dots for object
 * keys and bare indices for arrays: "integrals.pitch", "profile.0.t".
 */

export const rawNumbersAt = (
  text: string,
  wanted: Iterable<string>,
): Map<string, string> => {
  const targets = new Set(wanted);
  const found = new Map<string, string>();
  const path: (string | number)[] = [];
  // the top of this stack tracks whether we are inside an object (expect
  // keys) or an array (track element indices)
  const frames: { kind: "obj" | "arr"; index: number }[] = [];
  let pendingKey: string | null = null;
  let i = 0;
  const n = text.length;

  const pathName = (): string => path.join(".");

  const enterValue = (): void => {
    const frame = frames[frames.length - 1];
    if (!frame) return;
    if (frame.kind === "obj") {
      if (pendingKey === null) return;
      path.push(pendingKey);
      pendingKey = null;
    } else {
      path.push(frame.index);
      frame.index += 1;
    }
  };

  const leaveValue = (): void => {
    if (frames.length > 0) path.pop();
  };

  const readString = (): string => {
    // i sits on the opening quote
    let j = i + 1;
    let out = "";
    while (j < n) {
      const ch = text[j];
      if (ch === "\\") {
        out += text[j + 1] === "u"
          ? String.fromCharCode(parseInt(text.slice(j + 2, j + 6), 16))
          : ({ '"': '"', "\\": "\\", "/": "/", b: "\b", f: "\f", n: "\n", r: "\r", t: "\t" }[text[j + 1]] ?? text[j + 1]);
        j += text[j + 1] === "u" ? 6 : 2;
      } else if (ch === '"') {
        j += 1;
        break;
      } else {
        out += ch;
        j += 1;
      }
    }
    i = j;
    return out;
  };

  while (i < n && found.size < targets.size) {
    const ch = text[i];
    if (ch === "{") {
      enterValue();
      frames.push({ kind: "obj", index: 0 });
      i += 1;
    } else if (ch === "[") {
      enterValue();
      frames.push({ kind: "arr", index: 0 });
      i += 1;
    } else if (ch === "}" || ch === "]") {
      frames.pop();
      leaveValue();
      i += 1;
    } else if (ch === '"') {
      const frame = frames[frames.length - 1];
      if (frame?.kind === "obj" && pendingKey === null) {
        pendingKey = readString();
      } else {
        enterValue();
        readString();
        leaveValue();
      }
    } else if (ch === "-" || (ch >= "0" && ch <= "9")) {
      const start = i;
      while (i < n && /[-+0-9.eE]/.test(text[i])) i += 1;
      enterValue();
      if (targets.has(pathName())) found.set(pathName(), text.slice(start, i));
      leaveValue();
    } else if (ch === "t" || ch === "f" || ch === "n") {
      enterValue();
      leaveValue();
      i += ch === "f" ? 5 : 4;
    } else {
      i += 1; // whitespace, ':', ','
    }
  }
  return found;
};
