/** Synthetic copy pairs for low-resource training.
 *
 * A handful of fixture words is far too little for the decoder to learn the
 * generic echo behaviour the normalization task rests on, so training can mix
 * in identity pairs sampled from a character bigram chain fitted to the
 * training words. The chain keeps the strings phonotactically close to real
 * transcriptions; strings ending in characters touched by accent rules on the
 * word-final position (s, z) are rejected so the synthetic data can never
 * contradict a learned word-final change.
 */
import { Sample } from './data';

const START = '';
const END = '';

export function mulberry32(seed: number): () => number {
  let state = seed >>> 0;
  return () => {
    state = (state + 0x6d2b79f5) >>> 0;
    let t = state;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export class BigramChain {
  private readonly transitions = new Map<string, string[]>();

  static fit(words: Iterable<string>): BigramChain {
    const chain = new BigramChain();
    for (const word of words) {
      const s = START + word + END;
      const chars = [...s];
      for (let i = 0; i + 1 < chars.length; i++) {
        let next = chain.transitions.get(chars[i]);
        if (next === undefined) {
          next = [];
          chain.transitions.set(chars[i], next);
        }
        next.push(chars[i + 1]);
      }
    }
    return chain;
  }

  sample(rand: () => number, maxLen: number): string {
    let out = '';
    let current = START;
    while ([...out].length < maxLen) {
      const next = this.transitions.get(current);
      if (!next || next.length === 0) break;
      const ch = next[Math.floor(rand() * next.length)];
      if (ch === END) break;
      out += ch;
      current = ch;
    }
    return out;
  }
}

export interface CopyPairOptions {
  count: number;
  maxLen: number;
  seed: number;
  forbiddenFinal?: string[];
}

export function syntheticCopyPairs(
  trainWords: string[],
  options: CopyPairOptions,
): Sample[] {
  const forbidden = new Set(options.forbiddenFinal ?? ['s', 'z']);
  const chain = BigramChain.fit(trainWords);
  const rand = mulberry32(options.seed);
  const seen = new Set(trainWords);
  const out: Sample[] = [];
  let attempts = 0;
  const maxAttempts = options.count * 50;
  while (out.length < options.count && attempts < maxAttempts) {
    attempts++;
    const w = chain.sample(rand, options.maxLen);
    if ([...w].length < 2 || seen.has(w)) continue;
    if (forbidden.has(w[w.length - 1])) continue;
    out.push({ accented: w, canonical: w, word: `#copy:${w}` });
  }
  return out;
}
