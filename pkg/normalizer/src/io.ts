/** Checkpoint persistence without the native node bindings: model topology
 * and weights are written as model.json plus a raw weights.bin. */
import * as fs from 'fs';
import * as path from 'path';
import * as tf from '@tensorflow/tfjs';

export async function saveModel(model: tf.LayersModel, dir: string): Promise<void> {
  fs.mkdirSync(dir, { recursive: true });
  await model.save(
    tf.io.withSaveHandler(async (artifacts) => {
      const { weightData, ...rest } = artifacts;
      if (weightData === undefined || weightData === null) {
        throw new Error('model produced no weight data');
      }
      const buffers = Array.isArray(weightData) ? weightData : [weightData];
      const total = Buffer.concat(buffers.map((b) => Buffer.from(b)));
      fs.writeFileSync(path.join(dir, 'weights.bin'), total);
      fs.writeFileSync(path.join(dir, 'model.json'), JSON.stringify(rest));
      return { modelArtifactsInfo: { dateSaved: new Date(), modelTopologyType: 'JSON' } };
    }),
  );
}

export async function loadModel(dir: string): Promise<tf.LayersModel> {
  const meta = JSON.parse(fs.readFileSync(path.join(dir, 'model.json'), 'utf8'));
  const weights = fs.readFileSync(path.join(dir, 'weights.bin'));
  const weightData = weights.buffer.slice(
    weights.byteOffset,
    weights.byteOffset + weights.byteLength,
  );
  return tf.loadLayersModel(tf.io.fromMemory({ ...meta, weightData }));
}
