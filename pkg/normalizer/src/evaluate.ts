/** Greedy decoding and the evaluation metrics: sequence exact match as the
 * headline number, character accuracy as the secondary reading, and the
 * copy-everything baseline alongside for context. */
import * as fs from 'fs';
import * as path from 'path';
import * as tf from '@tensorflow/tfjs';

import { initBackend } from './backend';
import { Sample, identityFraction } from './data';
import { loadModel } from './io';
import { InferenceModels, buildInferenceModels } from './model';
import { Vocab } from './vocab';

export class VocabularyMismatch extends Error {}

export interface Checkpoint {
  models: InferenceModels;
  vocab: Vocab;
  tensorLen: number;
}

export async function loadCheckpoint(dir: string): Promise<Checkpoint> {
  await initBackend();
  const config = JSON.parse(fs.readFileSync(path.join(dir, 'config.json'), 'utf8'));
  const vocab = Vocab.fromJSON(config.vocab);
  const training = await loadModel(dir);
  return {
    models: buildInferenceModels(training, config.hidden),
    vocab,
    tensorLen: config.tensor_len,
  };
}

export function greedyDecode(checkpoint: Checkpoint, accented: string): string {
  const { models, vocab, tensorLen } = checkpoint;
  const decodedIds: number[] = [];
  tf.tidy(() => {
    const encBuf = tf.buffer([1, tensorLen, vocab.size]);
    const src = vocab.encode(accented);
    src.forEach((id, t) => encBuf.set(1, 0, t, id));
    for (let t = src.length; t < tensorLen; t++) encBuf.set(1, 0, t, vocab.pad);
    let [h, c] = models.encoder.predict(encBuf.toTensor()) as tf.Tensor[];
    let current = vocab.sos;
    for (let step = 0; step < tensorLen; step++) {
      const stepBuf = tf.buffer([1, 1, vocab.size]);
      stepBuf.set(1, 0, 0, current);
      const [probs, nextH, nextC] = models.decoderStep.predict([
        stepBuf.toTensor(),
        h,
        c,
      ]) as tf.Tensor[];
      current = (probs.squeeze().argMax() as tf.Tensor).dataSync()[0];
      h = nextH;
      c = nextC;
      if (current === vocab.eos || current === vocab.pad) break;
      decodedIds.push(current);
    }
  });
  return decodedIds.map((id) => vocab.chars[id]).join('');
}

export function characterAccuracy(decoded: string, target: string): number {
  const a = [...decoded];
  const b = [...target];
  const n = Math.max(a.length, b.length);
  if (n === 0) return 1;
  let matches = 0;
  for (let i = 0; i < Math.min(a.length, b.length); i++) {
    if (a[i] === b[i]) matches++;
  }
  return matches / n;
}

export interface EvalResult {
  exact_match: number;
  char_acc: number;
  identity_baseline: number;
  n_test: number;
}

export function evaluate(checkpoint: Checkpoint, samples: Sample[]): EvalResult {
  for (const sample of samples) {
    if (!checkpoint.vocab.has(sample.accented) || !checkpoint.vocab.has(sample.canonical)) {
      throw new VocabularyMismatch(
        `test sample uses characters outside the checkpoint vocabulary: ${sample.accented}`,
      );
    }
  }
  const cache = new Map<string, string>();
  let exact = 0;
  let charAcc = 0;
  for (const sample of samples) {
    let decoded = cache.get(sample.accented);
    if (decoded === undefined) {
      decoded = greedyDecode(checkpoint, sample.accented);
      cache.set(sample.accented, decoded);
    }
    if (decoded === sample.canonical) exact++;
    charAcc += characterAccuracy(decoded, sample.canonical);
  }
  const n = samples.length;
  return {
    exact_match: n === 0 ? 0 : exact / n,
    char_acc: n === 0 ? 0 : charAcc / n,
    identity_baseline: identityFraction(samples),
    n_test: n,
  };
}
